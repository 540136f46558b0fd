# Test decorators, a thread timeout and a JSON result runner for run_tests.py.
