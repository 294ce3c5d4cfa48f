import os
import sys

# Simulator directives
TOLERANCE = 1e-12
CIRCUIT_TOLERANCE = 1e-10
EIGENPHASE_TOLERANCE = 1e-8
DROP_THRESHOLD = 1e-14
MAX_DIMENSION = 1 << 16
SHOW_WARNINGS = True
COLORED_MESSAGES = True

# Version of the run report layout; bump on any field change
REPORT_FORMAT_VERSION = 1

# Terminal styles of the message layout
STYLES = {
    "bold": "\x1b[0;0;1m",
    "file": "\x1b[4;6;34m",
    "hint": "\x1b[4;0;34m",
    "hint_title": "\x1b[1;5;34m",
    "WARNING": "\x1b[1;5;33m",
    "ERROR": "\x1b[1;5;31m",
}
RESET = "\x1b[0m"


class Repr(object):
    """
    Helper class to provide a nice __repr__ for other classes
    """

    def __repr__(self):
        ignore = {"pos"}
        contents = sorted(self.__dict__.items())
        show = ("{attribute}={content!r}".format(attribute=attribute, content=content)
                for (attribute, content) in contents if attribute not in ignore)
        return "<{cls}({attributes})>".format(cls=self.__class__.__name__, attributes=", ".join(show))


def tolerance(tol):
    return TOLERANCE if tol is None else tol


def circuit_tolerance(tol):
    return CIRCUIT_TOLERANCE if tol is None else tol


def styled(text, style):
    if not COLORED_MESSAGES:
        return text
    return STYLES.get(style, STYLES["hint_title"]) + text + RESET


def excerpt(pos, msg, msg_type, gutter):
    """
    The fixture line a message points at, with a caret under the offending token
    """
    (row, col), _, src, _ = pos
    src = src.replace("\t", "    ")
    number = str(row + 1).rjust(gutter - 1) + " "
    margin = " " * gutter + "| "
    caret = " " * col
    return [" " * gutter + "|",
            styled(number, "bold") + "| " + src.rstrip(),
            margin + caret + styled("^", msg_type),
            margin + caret + styled(msg, msg_type)]


def show_message(msg_type, messages, hints):
    """
    Lays out messages as a titled block. Messages are grouped under the file they come from; those with a position
    quote the fixture line, the others are printed as they are.
    """
    rows = [pos[0][0] + 1 for file, pos, msg in messages if pos is not None]
    gutter = max([4] + [len(str(row)) + 1 for row in rows])
    indent = " " * gutter

    lines = ["@", styled(msg_type, msg_type), styled("=" * len(msg_type), msg_type)]
    last_file = None
    for file, pos, msg in messages:
        lines.append("")
        if file is not None and file != last_file:
            header = indent + "In {file}:".format(file=styled(file, "file"))
            if pos is None:
                lines.append(header + " " + styled(msg, msg_type))
                last_file = file
                continue
            lines.append(header)
        last_file = file
        if pos is None:
            lines.append(indent + styled(msg, msg_type))
        else:
            lines.extend(excerpt(pos, msg, msg_type, gutter))

    if hints:
        lines.extend(["", indent + styled("Hint:", "hint_title")])
        lines.extend(styled(indent + "- " + hint, "hint") for hint in hints)
    lines.append("@")
    return "\n".join(lines)


def organize_messages(pos_and_messages):
    """
    (pos, msg) pairs as (file, pos, msg), the file being the base name carried by the position
    """
    messages = []
    for pos, msg in pos_and_messages:
        file = None
        if pos is not None and len(pos) == 4 and pos[3] is not None:
            file = os.path.basename(pos[3])
        messages.append((file, pos, msg))
    return messages


def warn(msgs, hints=None):
    """
    Warning function used for print notices from the simulator
    """
    if SHOW_WARNINGS:
        sys.stderr.write(show_message("WARNING", organize_messages(msgs), hints=hints) + "\n")


class Error(Exception):
    """
    Error class used for throwing user errors from the simulator
    """
    exit_code = 2

    def __init__(self, pos_and_messages, hints=None):
        self.messages = organize_messages(pos_and_messages)
        self.hints = hints
        self.message = show_message("ERROR", self.messages, hints)
        Exception.__init__(self, self.message)

    def show(self):
        return self.message

    def plain(self):
        """
        Messages without layout nor colors, used in run reports
        """
        return "; ".join(msg for file, pos, msg in self.messages)


class ParseError(Error):
    pass


class DimensionError(Error):
    pass


class SizeError(Error):
    pass


class InvalidStateError(Error):
    pass


class NotUnitaryError(Error):
    pass


class DegenerateProgramError(Error):
    pass


class DegeneracyResolutionError(Error):
    pass


class NotCovariantError(Error):

    def __init__(self, pos_and_messages, residuals, hints=None):
        Error.__init__(self, pos_and_messages, hints=hints)
        self.residuals = residuals


class UsageError(Error):
    exit_code = 1


def error(msg, cls=Error, hints=None):
    """
    Shortcut for errors raised by library code, which has no source position
    """
    return cls([(None, msg)], hints=hints)
