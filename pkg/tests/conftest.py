def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive searches which take minutes")
