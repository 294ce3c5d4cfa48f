"""
Readers and writers for the text files the command line works with.

State, operator, domain and program files share the fixture syntax of `parser`: `name = value` header fields and
rows of numbers, complex entries written `re,im`, `#` comments anywhere.

    state       dim, kind (pure | mixed); N entries (pure) or N rows of N entries (mixed)
    operator    dim, form (matrix | coeffs); N rows of N entries, or `q p re im` rows
    domain      dim, descriptor (+ its parameters); `q p sign` rows
    program     dim, register_dim, scale; `q p phi c` rows

Wigner grids are CSV files with a commented header and one `q,p,value` line per grid point, q-major.

Writers print every float with repr(), so reading a written file gives back the same numbers bit for bit.
"""

import csv
import io
import numpy as np
from quorum import linalg, parser, programs, util, wigner

GRID_CONVENTION = "W(q,p) = Tr(A(q,p) rho) / 2N; raw sums are sum of sign*W, scaled sums 2N times that"
GRID_ORDERING = "row-major in q"


def number(value):
    return repr(float(value))


def complex_entry(value):
    value = complex(value)
    return "{re},{im}".format(re=number(value.real), im=number(value.imag))


def load(path):
    try:
        with open(path) as f:
            return f.read()
    except (IOError, OSError) as e:
        raise util.error("cannot read '{path}': {reason}".format(path=path, reason=e.strerror), util.ParseError)


def store(path, text):
    try:
        with open(path, "w") as f:
            f.write(text)
    except (IOError, OSError) as e:
        raise util.error("cannot write '{path}': {reason}".format(path=path, reason=e.strerror))


def dimension(fixture):
    field = fixture.field("dim")
    dim = field.as_int()
    if dim < 2:
        raise util.ParseError([(field.pos, "dimension must be at least 2 (got {dim})".format(dim=dim))])
    return dim


def check_rows(fixture, count, what):
    if len(fixture.rows) != count:
        source = "" if fixture.file is None else "{file}: ".format(file=fixture.file)
        msg = "{source}{what} needs {count} rows ({found} found)".format(
            source=source, what=what, count=count, found=len(fixture.rows))
        raise util.error(msg, util.ParseError)


def matrix_rows(fixture, dim, what):
    check_rows(fixture, dim, what)
    rows = []
    for row in fixture.rows:
        row.check_length(dim, "{what} row".format(what=what))
        rows.append([entry.as_complex() for entry in row.entries])
    return np.array(rows, dtype=complex)


def with_position(fn, node):
    """
    Runs a constructor and moves its error, if any, to the node's position
    """
    try:
        return fn()
    except util.Error as e:
        if node.pos is None or isinstance(e, util.NotCovariantError):
            raise
        raise e.__class__([(node.pos, msg) for file, pos, msg in e.messages], hints=e.hints)


# States

def read_state(src, file=None):
    fixture = parser.parse(src, file)
    dim = dimension(fixture)
    kind_field = fixture.field("kind")
    kind = kind_field.as_name((linalg.QuditState.PURE, linalg.QuditState.MIXED))
    if kind == linalg.QuditState.PURE:
        entries = [entry for row in fixture.rows for entry in row.entries]
        if len(entries) != dim:
            msg = (kind_field.pos, "pure state of dimension {dim} needs {dim} amplitudes ({count} found)".format(
                dim=dim, count=len(entries)))
            raise util.ParseError([msg])
        vector = np.array([entry.as_complex() for entry in entries])
        return with_position(lambda: linalg.QuditState(dim, kind, vector), kind_field)
    matrix = matrix_rows(fixture, dim, "density matrix")
    return with_position(lambda: linalg.QuditState(dim, kind, matrix), kind_field)


def write_state(state):
    lines = ["dim = {dim}".format(dim=state.dim), "kind = {kind}".format(kind=state.kind)]
    if state.kind == linalg.QuditState.PURE:
        lines.extend(complex_entry(value) for value in state.data)
    else:
        lines.extend(" ".join(complex_entry(value) for value in row) for row in state.data)
    return "\n".join(lines) + "\n"


# Operators

def read_operator(src, file=None):
    fixture = parser.parse(src, file)
    dim = dimension(fixture)
    form_field = fixture.field("form")
    form = form_field.as_name((programs.OperatorSpec.MATRIX, programs.OperatorSpec.COEFFICIENTS))
    if form == programs.OperatorSpec.MATRIX:
        matrix = matrix_rows(fixture, dim, "operator matrix")
        return programs.OperatorSpec(dim, form, matrix)

    coefficients = {}
    for row in fixture.rows:
        row.check_length(4, "coefficient line 'q p re im'")
        q, p = row.entries[0].as_int(), row.entries[1].as_int()
        if not (0 <= q < dim and 0 <= p < dim):
            msg = (row.pos, "coefficient index ({q}, {p}) is outside [0, {dim})".format(q=q, p=p, dim=dim))
            raise util.ParseError([msg])
        if (q, p) in coefficients:
            raise util.ParseError([(row.pos, "coefficient ({q}, {p}) is given twice".format(q=q, p=p))])
        coefficients[(q, p)] = complex(row.entries[2].as_float(), row.entries[3].as_float())
    return programs.OperatorSpec(dim, form, coefficients)


def write_operator(operator):
    lines = ["dim = {dim}".format(dim=operator.dim), "form = {form}".format(form=operator.form)]
    if operator.form == programs.OperatorSpec.MATRIX:
        lines.extend(" ".join(complex_entry(value) for value in row) for row in operator.data)
    else:
        for (q, p), value in sorted(operator.data.items()):
            lines.append("{q} {p} {re} {im}".format(q=q, p=p, re=number(value.real), im=number(value.imag)))
    return "\n".join(lines) + "\n"


# Domains

DESCRIPTORS = {
    "line": (wigner.line, ("b", "c")),
    "hline": (wigner.hline, ("p0",)),
    "vline": (wigner.vline, ("q0",)),
    "segment": (wigner.segment, ("b", "c", "start", "length")),
    "parallelogram": (wigner.parallelogram, ("b", "q0", "width", "c0", "height")),
    "custom": (None, ()),
}


def read_domain(src, file=None):
    """
    The explicit `q p sign` rows define the domain. When the descriptor's parameters are present too, the rows
    must match the constructor's points; without rows, the constructor builds them.
    """
    fixture = parser.parse(src, file)
    dim = dimension(fixture)
    descriptor_field = fixture.field("descriptor")
    descriptor = descriptor_field.as_name(sorted(DESCRIPTORS))
    constructor, names = DESCRIPTORS[descriptor]
    params = {name: fixture.field(name).as_int() for name in names if fixture.has_field(name)}

    built = None
    if constructor is not None and len(params) == len(names):
        built = with_position(lambda: constructor(dim, **params), descriptor_field)

    if len(fixture.rows) == 0:
        if built is None:
            msg = (descriptor_field.pos, "domain has no 'q p sign' lines")
            raise util.ParseError([msg], hints=["List the points, or give all parameters of the descriptor."])
        return built

    signs = {}
    for row in fixture.rows:
        row.check_length(3, "domain line 'q p sign'")
        q, p, sign = [entry.as_int() for entry in row.entries]
        if (q, p) in signs:
            raise util.ParseError([(row.pos, "domain point ({q}, {p}) is given twice".format(q=q, p=p))])
        signs[(q, p)] = sign
    domain = with_position(lambda: wigner.PhaseDomain(dim, signs, descriptor, params), fixture.rows[0])

    if built is not None and built.signs != domain.signs:
        msg = (descriptor_field.pos, "points do not match the '{descriptor}' descriptor".format(descriptor=descriptor))
        raise util.ParseError([msg])
    return domain


def write_domain(domain):
    lines = ["dim = {dim}".format(dim=domain.dim), "descriptor = {descriptor}".format(descriptor=domain.descriptor)]
    lines.extend("{name} = {value}".format(name=name, value=value) for name, value in sorted(domain.params.items()))
    lines.extend("{q} {p} {sign}".format(q=q, p=p, sign=domain.signs[(q, p)]) for q, p in domain.points)
    return "\n".join(lines) + "\n"


# Programs

def read_program(src, file=None):
    fixture = parser.parse(src, file)
    dim = dimension(fixture)
    register_dim = fixture.field("register_dim").as_int()
    scale = fixture.field("scale").as_float()
    c, phi = {}, {}
    for row in fixture.rows:
        row.check_length(4, "program line 'q p phi c'")
        q, p, bit = [entry.as_int() for entry in row.entries[:3]]
        if (q, p) in c:
            raise util.ParseError([(row.pos, "program point ({q}, {p}) is given twice".format(q=q, p=p))])
        c[(q, p)] = row.entries[3].as_float()
        phi[(q, p)] = bit
    return with_position(lambda: programs.ProgramState(dim, c, phi, scale, register_dim=register_dim),
                         fixture.field("scale"))


def write_program(ps):
    lines = ["dim = {dim}".format(dim=ps.dim), "register_dim = {size}".format(size=ps.register_dim),
             "scale = {scale}".format(scale=number(ps.scale))]
    lines.extend("{q} {p} {phi} {c}".format(q=q, p=p, phi=phi, c=number(c)) for q, p, phi, c in ps.support())
    return "\n".join(lines) + "\n"


# Wigner grids

def write_grid(grid):
    out = io.StringIO()
    out.write("# dim = {dim}\n".format(dim=grid.dim))
    out.write("# convention = {convention}\n".format(convention=GRID_CONVENTION))
    out.write("# ordering = {ordering}\n".format(ordering=GRID_ORDERING))
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["q", "p", "value"])
    size = 2 * grid.dim
    for q in range(size):
        for p in range(size):
            writer.writerow([q, p, number(grid.values[q, p])])
    return out.getvalue()


def read_grid(src, file=None):
    """
    Grids must list every point of the 2N x 2N grid exactly once. Errors point at the offending line.
    """
    source = "" if file is None else "{file}: ".format(file=file)

    def grid_error(ln, line, msg):
        return util.ParseError([(((ln, 0), (ln, len(line)), line, file), msg)])

    header = {}
    data = []
    for ln, line in enumerate(src.splitlines()):
        if line.startswith("#"):
            name, _, value = line[1:].partition("=")
            header[name.strip()] = (ln, line, value.strip())
        elif line.strip() != "":
            data.append((ln, line))
    if "dim" not in header:
        raise util.error("{source}missing field 'dim'".format(source=source), util.ParseError)
    ln, line, value = header["dim"]
    try:
        dim = int(value)
    except ValueError:
        raise grid_error(ln, line, "dimension '{value}' is not an integer".format(value=value))
    if dim < 2:
        raise grid_error(ln, line, "dimension must be at least 2 (got {dim})".format(dim=dim))
    size = 2 * dim

    if len(data) == 0 or next(csv.reader([data[0][1]])) != ["q", "p", "value"]:
        raise util.error("{source}grid must start with the 'q,p,value' line".format(source=source), util.ParseError)
    values = np.full((size, size), np.nan)
    for ln, line in data[1:]:
        row = next(csv.reader([line]))
        if len(row) != 3:
            raise grid_error(ln, line, "grid line must be 'q,p,value'")
        try:
            q, p, value = int(row[0]), int(row[1]), float(row[2])
        except ValueError:
            raise grid_error(ln, line, "grid line needs integer q, p and a real value")
        if not np.isfinite(value):
            raise grid_error(ln, line, "grid value must be finite (got {value!r})".format(value=value))
        if not (0 <= q < size and 0 <= p < size):
            raise grid_error(ln, line, "grid point ({q}, {p}) is outside [0, {size})".format(q=q, p=p, size=size))
        if not np.isnan(values[q, p]):
            raise grid_error(ln, line, "grid point ({q}, {p}) is given twice".format(q=q, p=p))
        values[q, p] = value
    if np.isnan(values).any():
        missing = np.argwhere(np.isnan(values))
        q, p = missing[0]
        msg = "{source}grid does not cover all {count} points (first missing: ({q}, {p}))".format(
            source=source, count=size * size, q=q, p=p)
        raise util.error(msg, util.ParseError)
    return wigner.WignerGrid(dim, values)
