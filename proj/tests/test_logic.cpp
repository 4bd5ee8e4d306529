int placeholder_test_logic;
