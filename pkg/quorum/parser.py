import rply
from quorum import ast_ as ast, util


OPERATORS = [
    ("NUMBER", r"[-+]?([0-9]+(\.[0-9]*)?|\.[0-9]+)([eE][-+]?[0-9]+)?"),
    ("COMMA", r","),
    ("ASSIGN", r"="),
    ("IDENTIFIER", r"[a-zA-Z_][a-zA-Z0-9_\-]*"),
    ("NEW_LINE", r"\r?\n"),
    ("COMMENT", r"#[^\n]*"),
    ("SPACES", r"[ \t]+"),
]


def lexer():
    lg = rply.LexerGenerator()
    for token, value in OPERATORS:
        lg.add(token, value)
    return lg.build()


LEXER = lexer()


def lex(src, state):
    """
    Takes the contents of a fixture file and returns an iterator over its tokens. Comments and spaces never reach the
    parser; consecutive line breaks are kept since every blank line is a valid (empty) line.
    """
    tokens = []
    for token in LEXER.lex(src):
        if token.name in ("COMMENT", "SPACES"):
            continue
        tokens.append(token)
    return iter(tokens)


# Concatenate the final list of tokens
tokens = [token for token, value in OPERATORS if token not in ["COMMENT", "SPACES"]]


pg = rply.ParserGenerator(tokens)


@pg.production("fixture : lines")
def fixture(state, p):
    return ast.Fixture(p[0], file=state.file)


@pg.production("lines : lines line")
def lines(state, p):
    if p[1] is not None:
        p[0].append(p[1])
    return p[0]


@pg.production("lines : ")
def lines(state, p):
    return []


@pg.production("line : NEW_LINE")
def line(state, p):
    return None


@pg.production("line : IDENTIFIER ASSIGN value NEW_LINE")
def line(state, p):
    pos, name, value = state.pos(p[0]), p[0].getstr(), p[2]
    return ast.Field(pos, name, value)


@pg.production("line : entries NEW_LINE")
def line(state, p):
    entries = p[0]
    return ast.Row(entries[0].pos, entries)


@pg.production("value : IDENTIFIER")
def value(state, p):
    return ast.Name(state.pos(p[0]), p[0].getstr())


@pg.production("value : NUMBER")
def value(state, p):
    return ast.Number(state.pos(p[0]), p[0].getstr())


@pg.production("entries : entries entry")
def entries(state, p):
    p[0].append(p[1])
    return p[0]


@pg.production("entries : entry")
def entries(state, p):
    return [p[0]]


@pg.production("entry : NUMBER")
def entry(state, p):
    return ast.Number(state.pos(p[0]), p[0].getstr())


@pg.production("entry : NUMBER COMMA NUMBER")
def entry(state, p):
    pos = state.pos(p[0])
    real = ast.Number(pos, p[0].getstr())
    imag = ast.Number(state.pos(p[2]), p[2].getstr())
    return ast.Complex(pos, real, imag)


@pg.error
def error(state, token):
    if token.source_pos is None:
        msg = (state.end_pos(), "unexpected end of file")
    else:
        msg = (state.pos(token), "invalid syntax")
    raise util.ParseError([msg], hints=["Lines are either 'name = value' or rows of numbers (complex as re,im)."])


PARSER = pg.build()


class State(object):

    def __init__(self, file, src):
        self.file = file
        self.src = src
        self.lines = src.splitlines()

    def line(self, ln):
        return self.lines[ln] if ln < len(self.lines) else ""

    def span(self, ln, col, width):
        return (ln, col), (ln, col + width), self.line(ln), self.file

    def pos(self, token):
        """
        Position of a token from rply's 1-based line and column numbers
        """
        return self.span(token.source_pos.lineno - 1, token.source_pos.colno - 1, len(token.value))

    def offset_pos(self, idx):
        """
        Position of a character index. rply reports the column of the previous token on lexing errors, so the
        column is recounted from the last line break.
        """
        ln = self.src.count("\n", 0, idx)
        return self.span(ln, idx - (self.src.rfind("\n", 0, idx) + 1), 1)

    def end_pos(self):
        ln = max(len(self.lines) - 1, 0)
        return self.span(ln, len(self.line(ln)), 0)


def parse(src, file=None):
    """
    Takes the contents of a fixture file and returns its ast.Fixture. Nodes get a pos field containing a 4-element
    tuple:

    - Tuple of start location, as 0-based line and column numbers
    - Tuple of end location, as 0-based line and column numbers
    - The full line
    - The file name
    """
    if not src.endswith("\n"):
        src += "\n"
    state = State(file, src)
    try:
        tokens = list(lex(src, state))
    except rply.LexingError as e:
        msg = (state.offset_pos(e.source_pos.idx), "unexpected character")
        raise util.ParseError([msg], hints=["Check whether there is a typo in the line."])

    return PARSER.parse(iter(tokens), state=state)
