import argparse
import re
import sys
import unittest

from suite_utils.json_test_runner import JSONTestRunner


def _flatten(suite):
    for item in suite:
        if isinstance(item, unittest.TestSuite):
            yield from _flatten(item)
        else:
            yield item


def select(suite: unittest.TestSuite, task: str, exhaustive: bool) -> unittest.TestSuite:
    kept = unittest.TestSuite()
    for test in _flatten(suite):
        if "FailedTest" in type(test).__name__:
            kept.addTest(test)
            continue
        func = getattr(test, test._testMethodName)
        if getattr(func, "__exhaustive__", None) is True and not exhaustive:
            continue
        if task and not re.match(rf"^{re.escape(task)}(\.|$)", getattr(func, "__number__", "")):
            continue
        kept.addTest(test)
    return kept


if __name__ == "__main__":

    p = argparse.ArgumentParser()
    p.add_argument(
        "task",
        help=(
            "Number prefix of the tests to run; blank for all.\n\n"
            "Example: run_tests.py 3\n"
            "Runs the tests with @number('3.x')."
        ),
        default="",
        nargs="?",
    )
    p.add_argument(
        "-x",
        "--exhaustive",
        help="Also run the full parameter sweeps.",
        action="store_true",
    )
    p.add_argument(
        "-j",
        "--json",
        help="Print results as JSON.",
        action="store_true",
    )
    args = p.parse_args()

    suite = select(unittest.defaultTestLoader.discover("tests", top_level_dir="."), args.task, args.exhaustive)
    if args.json:
        outcome = JSONTestRunner(stream=sys.stdout).run(suite)
    else:
        outcome = unittest.TextTestRunner().run(suite)
    sys.exit(0 if outcome.wasSuccessful() else 1)
