int placeholder_test_syntax;
