int placeholder_test_typing;
