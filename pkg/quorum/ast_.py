"""
Contains classes for the syntax tree of the line-oriented fixture files (states, operators, domains and programs).

All classes have a `pos` field containing location information, as produced by parser.State.pos(). A fixture is a
list of header fields (`name = value`) and data rows (whitespace-separated numbers, complex entries written `re,im`).
Fields and rows may be interleaved; readers in `formats` decide what they mean.
"""

from quorum import util


class Node(util.Repr):

    def __init__(self, pos):
        self.pos = pos


class Fixture(Node):

    def __init__(self, elements, file=None):
        Node.__init__(self, None)
        self.file = file
        self.fields = {}
        self.rows = []
        for element in elements:
            if isinstance(element, Field):
                if element.name in self.fields:
                    msg = (element.pos, "field '{name}' is set twice".format(name=element.name))
                    raise util.ParseError([msg])
                self.fields[element.name] = element
            else:
                self.rows.append(element)

    def missing(self, name):
        source = "" if self.file is None else "{file}: ".format(file=self.file)
        msg = "{source}missing field '{name}'".format(source=source, name=name)
        return util.error(msg, util.ParseError)

    def field(self, name, default=None):
        if name in self.fields:
            return self.fields[name]
        if default is not None:
            return default
        raise self.missing(name)

    def has_field(self, name):
        return name in self.fields


class Field(Node):

    def __init__(self, pos, name, value):
        Node.__init__(self, pos)
        self.name = name
        self.value = value

    def as_int(self):
        return self.value.as_int()

    def as_float(self):
        return self.value.as_float()

    def as_name(self, allowed=None):
        if not isinstance(self.value, Name):
            msg = (self.value.pos, "field '{name}' must be a name".format(name=self.name))
            raise util.ParseError([msg])
        if allowed is not None and self.value.name not in allowed:
            msg = (self.value.pos, "field '{name}' must be one of: {allowed}".format(
                name=self.name, allowed=", ".join(allowed)))
            raise util.ParseError([msg])
        return self.value.name


class Name(Node):

    def __init__(self, pos, name):
        Node.__init__(self, pos)
        self.name = name

    def as_int(self):
        raise util.ParseError([(self.pos, "expected an integer, not '{name}'".format(name=self.name))])

    def as_float(self):
        raise util.ParseError([(self.pos, "expected a number, not '{name}'".format(name=self.name))])


class Number(Node):

    def __init__(self, pos, literal):
        Node.__init__(self, pos)
        self.literal = literal

    def as_int(self):
        try:
            return int(self.literal)
        except ValueError:
            raise util.ParseError([(self.pos, "expected an integer, not '{literal}'".format(literal=self.literal))])

    def as_float(self):
        return float(self.literal)

    def as_complex(self):
        return complex(self.as_float(), 0.0)


class Complex(Node):

    def __init__(self, pos, real, imag):
        Node.__init__(self, pos)
        self.real = real
        self.imag = imag

    def as_int(self):
        raise util.ParseError([(self.pos, "expected an integer, not a complex entry")])

    def as_float(self):
        raise util.ParseError([(self.pos, "expected a real number, not a complex entry")])

    def as_complex(self):
        return complex(self.real.as_float(), self.imag.as_float())


class Row(Node):

    def __init__(self, pos, entries):
        Node.__init__(self, pos)
        self.entries = entries

    def __len__(self):
        return len(self.entries)

    def check_length(self, length, what):
        if len(self.entries) != length:
            msg = (self.pos, "{what} must have {length} entries ({count} found)".format(
                what=what, length=length, count=len(self.entries)))
            raise util.ParseError([msg])
