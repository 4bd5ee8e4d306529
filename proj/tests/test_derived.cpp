int placeholder_test_derived;
