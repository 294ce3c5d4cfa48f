"""
Run reports: one JSON document per command run.

A report echoes the command line, identifies every input file by the sha256 of its contents and carries the numeric
results. Everything except `duration` is a function of the inputs and the seed, so sampled runs can be compared
bit for bit. Reports appended to a `--report` file are never rewritten; `format_version` changes with the layout.
"""

import hashlib
import json
import time
from quorum import util


def digest(text):
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def plain(value):
    """
    Numpy scalars and arrays as plain JSON values
    """
    if hasattr(value, "tolist"):
        return value.tolist()
    if isinstance(value, complex):
        return [value.real, value.imag]
    raise TypeError("{value!r} is not serializable".format(value=value))


class RunReport(util.Repr):

    def __init__(self, command, argv):
        self.command = command
        self.argv = list(argv)
        self.inputs = {}
        self.mode = None
        self.seed = None
        self.shots = None
        self.results = {}
        self.status = "ok"
        self.error = None
        self.exit_code = 0
        self.duration = None
        self._start = time.perf_counter()

    def add_input(self, path, text):
        self.inputs[path] = digest(text)

    def fail(self, error):
        self.status = "error"
        self.error = error.plain()
        self.exit_code = error.exit_code

    def finish(self):
        self.duration = time.perf_counter() - self._start
        return self

    def to_dict(self):
        return {
            "format_version": util.REPORT_FORMAT_VERSION,
            "command": self.command,
            "argv": self.argv,
            "inputs": self.inputs,
            "mode": self.mode,
            "seed": self.seed,
            "shots": self.shots,
            "results": self.results,
            "status": self.status,
            "error": self.error,
            "exit_code": self.exit_code,
            "duration": self.duration,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, default=plain)

    def append_to(self, path):
        try:
            with open(path, "a") as f:
                f.write(self.to_json() + "\n")
        except (IOError, OSError) as e:
            raise util.error("cannot append the report to '{path}': {reason}".format(path=path, reason=e.strerror))
