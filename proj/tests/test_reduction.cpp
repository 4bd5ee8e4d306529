int placeholder_test_reduction;
