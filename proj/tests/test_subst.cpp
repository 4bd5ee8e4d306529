int placeholder_test_subst;
