int placeholder_test_lax;
