"""
unittest runner that writes one JSON document with a record per test.
"""
import inspect
import json
import sys
from unittest import result
from unittest.signals import registerResult

import suite_utils.decorators as decorators

DECORATOR_CLASSES = [
    klass for _name, klass in inspect.getmembers(decorators)
    if inspect.isclass(klass) and issubclass(klass, decorators.Decorator) and klass is not decorators.Decorator
]


class JSONTestResult(result.TestResult):

    def __init__(self, stream, descriptions, verbosity, records):
        super().__init__(stream, descriptions, verbosity)
        self.descriptions = descriptions
        self.records = records

    def getDescription(self, test):
        first_line = test.shortDescription()
        if self.descriptions and first_line:
            return first_line
        return str(test)

    def getOutput(self):
        if not self.buffer:
            return ""
        out = self._stdout_buffer.getvalue()
        err = self._stderr_buffer.getvalue()
        if err:
            if out and not out.endswith("\n"):
                out += "\n"
            out += err
        return out

    def buildRecord(self, test, err=None, status="passed"):
        record = {"name": self.getDescription(test), "status": status}
        method = getattr(test, test._testMethodName)
        for dec in DECORATOR_CLASSES:
            dec.change_result(getattr(method, dec.get_attr_name(), None), record, self.getOutput(), err)
        record["passed"] = err is None
        if err is not None:
            record["feedback"] = f"{err[0].__name__}: {err[1]}"
        return record

    def addSuccess(self, test):
        super().addSuccess(test)
        self.records.append(self.buildRecord(test))

    def addError(self, test, err):
        super().addError(test, err)
        self._mirrorOutput = False
        self.records.append(self.buildRecord(test, err, "error"))

    def addFailure(self, test, err):
        super().addFailure(test, err)
        self._mirrorOutput = False
        self.records.append(self.buildRecord(test, err, "failed"))

    def addSkip(self, test, reason):
        super().addSkip(test, reason)
        self.records.append({"name": self.getDescription(test), "status": "skipped", "reason": reason})


class JSONTestRunner:

    resultclass = JSONTestResult

    def __init__(self, stream=sys.stdout, descriptions=True, verbosity=1, failfast=False, buffer=True):
        self.stream = stream
        self.descriptions = descriptions
        self.verbosity = verbosity
        self.failfast = failfast
        self.buffer = buffer
        self.json_data = {"testcases": []}

    def _makeResult(self):
        return self.resultclass(self.stream, self.descriptions, self.verbosity, self.json_data["testcases"])

    def run(self, test):
        outcome = self._makeResult()
        registerResult(outcome)
        outcome.failfast = self.failfast
        outcome.buffer = self.buffer
        outcome.startTestRun()
        try:
            test(outcome)
        finally:
            outcome.stopTestRun()
        self.json_data["summary"] = {
            "run": outcome.testsRun,
            "failures": len(outcome.failures),
            "errors": len(outcome.errors),
            "skipped": len(outcome.skipped),
        }
        json.dump(self.json_data, self.stream, indent=4)
        self.stream.write("\n")
        return outcome
