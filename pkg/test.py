from __future__ import print_function
import contextlib
import io
import json
import math
import os
import sys
import unittest
from quorum.__main__ import main

DIR = os.path.dirname(os.path.abspath(__file__))


class QuorumTest(unittest.TestCase):
    """
    One command-line run described by the `# test: {...}` header of a fixture file. The fixture is the first input
    of the command; the header gives the command, the other inputs, extra arguments, the expected exit code and the
    expected report values (dotted paths into the JSON report) or a substring of the error.
    """

    def __init__(self, file):
        unittest.TestCase.__init__(self)
        self.file = file
        self.base = os.path.splitext(self.file)[0]
        self.options = self.get_options()

    def get_options(self):
        with open(self.file) as f:
            h = f.readline()
            if h.startswith("# test: "):
                return json.loads(h[8:])
            else:
                return {}

    def run_command(self):
        folder = os.path.dirname(self.file)
        inputs = [self.file] + [os.path.join(folder, name) for name in self.options.get("inputs", [])]
        argv = [self.options["command"]] + inputs + self.options.get("args", []) + ["--no-colored-messages"]
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main(argv)
        return code, json.loads(out.getvalue()), err.getvalue()

    def lookup(self, report, path):
        value = report
        for key in path.split("."):
            value = value[key]
        return value

    def runTest(self):
        code, report, err = self.run_command()
        if code != self.options.get("ret", 0):
            print(self.base, "returned", code, report["error"], err)
        self.assertEqual(self.options.get("ret", 0), code)

        tol = self.options.get("tol", 1e-9)
        for path, expected in sorted(self.options.get("results", {}).items()):
            value = self.lookup(report, path)
            if isinstance(expected, float):
                self.assertTrue(math.isclose(value, expected, abs_tol=tol),
                                "{path}: expected {expected}, returned {value}".format(
                                    path=path, expected=expected, value=value))
            else:
                self.assertEqual(expected, value, path)

        if "error" in self.options:
            self.assertIn(self.options["error"], report["error"])


def get_tests_from_dir(sub_dir):
    tests = []
    test_dir = os.path.join(DIR, "tests", sub_dir)
    for file in sorted(os.listdir(test_dir)):
        test = QuorumTest(os.path.join(test_dir, file))
        if "command" in test.options:
            tests.append(test)
    return tests


def get_all_tests():
    tests = []
    tests.extend(get_tests_from_dir("cli"))
    return tests


def suite():
    suite = unittest.TestSuite()
    suite.addTests(get_all_tests())
    suite.addTests(unittest.defaultTestLoader.discover(os.path.join(DIR, "tests"), top_level_dir=DIR))
    return suite


if __name__ == "__main__":
    sys.path.insert(0, DIR)
    unittest.main(defaultTest="suite")
