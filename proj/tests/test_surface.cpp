int placeholder_test_surface;
