#!/usr/bin/env python

import optparse
import sys
from quorum import array, compiler, formats, report as reports, scattering, util, wigner

# Exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
VERDICT_EXIT_CODES = {wigner.ABOVE: 0, wigner.BELOW: 3, wigner.ABSTAIN: 4}

WIGNER_METHODS = ("direct", "circuit", "both")


def require_seed(options):
    if options["seed"] is None:
        raise util.error("sampled runs need --seed", util.UsageError,
                         hints=["All randomness comes from the seed; there is no implicit clock seed."])


def int_list(text, flag):
    try:
        return [int(item) for item in text.split(",") if item.strip() != ""]
    except ValueError:
        raise util.error("{flag} takes comma-separated integers (got '{text}')".format(flag=flag, text=text),
                         util.UsageError)


def expect(report, inputs, options):
    """
    Expectation value Tr(rho O) of an operator file on a state file
    """
    (state_path, state_src), (operator_path, operator_src) = inputs
    mode = options["mode"]
    if mode == scattering.SAMPLED:
        require_seed(options)
    state = formats.read_state(state_src, state_path)
    operator = formats.read_operator(operator_src, operator_path)
    if operator.dim != state.dim:
        msg = "operator dimension {op} does not match state dimension {state}".format(op=operator.dim, state=state.dim)
        raise util.error(msg, util.DimensionError)

    result = array.expectation(state, operator, mode=mode, shots=options["shots"], seed=options["seed"])
    if result.degenerate:
        util.warn([(None, "operator is zero; its expectation value is exactly 0 and no program was run")])

    oracle = state.expectation(operator.matrix())
    report.mode, report.seed, report.shots = result.mode, result.seed, result.shots
    report.results = result.to_dict()
    report.results["oracle"] = {"real": oracle.real, "imag": oracle.imag}


def wigner_grid(report, inputs, options):
    """
    Discrete Wigner function on the 2N x 2N grid, written as CSV with --out
    """
    ((state_path, state_src),) = inputs
    method = options["method"]
    if method not in WIGNER_METHODS:
        raise util.error("unknown method '{method}'".format(method=method), util.UsageError,
                         hints=["Use one of: " + ", ".join(WIGNER_METHODS) + "."])
    state = formats.read_state(state_src, state_path)

    grids = {}
    if method in ("direct", "both"):
        grids["direct"] = wigner.wigner(state)
    if method in ("circuit", "both"):
        grids["circuit"] = wigner.wigner_circuit(state)
    grid = grids["direct"] if "direct" in grids else grids["circuit"]

    report.mode = scattering.EXACT
    report.results = {"dim": state.dim, "method": method, "total": grid.total(),
                      "line_families": wigner.line_family_sums(grid)}
    if method == "both":
        report.results["max_discrepancy"] = float(abs(grids["direct"].values - grids["circuit"].values).max())
    if options["out"] is not None:
        formats.store(options["out"], formats.write_grid(grid))
        report.results["csv"] = options["out"]


def linesum(report, inputs, options):
    """
    Sums of W along one family of lines, by direct sum, by translation projectors and by the array
    """
    ((state_path, state_src),) = inputs
    state = formats.read_state(state_src, state_path)
    dim = state.dim
    grid = wigner.wigner(state)
    size = 2 * dim

    if options["vertical"]:
        b, a = 1, 0
        probabilities = wigner.translation_probabilities(state, b, a)
        rows = []
        for q0 in range(size):
            raw, scaled, result = wigner.run_domain(state, wigner.vline(dim, q0))
            rows.append({"line": q0, "direct": wigner.vertical_line_sum(grid, q0),
                         "projector": probabilities.get(q0 % size, 0.0), "circuit": raw})
    else:
        b, a = options["shear"] % size, 1
        probabilities = wigner.translation_probabilities(state, b, a)
        rows = []
        for c in range(size):
            raw, scaled, result = wigner.run_domain(state, wigner.line(dim, b, c))
            rows.append({"line": c, "direct": wigner.line_sum(grid, b, c),
                         "projector": probabilities.get(wigner.eigenphase_index(c, dim), 0.0), "circuit": raw})

    report.mode = scattering.EXACT
    report.results = {
        "dim": dim, "b": b, "a": a, "lines": rows,
        "family_sum": sum(row["direct"] for row in rows),
        "max_projector_discrepancy": max(abs(row["direct"] - row["projector"]) for row in rows),
        "max_circuit_discrepancy": max(abs(row["direct"] - row["circuit"]) for row in rows),
    }


def decide(report, inputs, options):
    """
    Threshold decision on the polarization-scaled Wigner sum over a domain file
    """
    (state_path, state_src), (domain_path, domain_src) = inputs
    require_seed(options)
    if options["threshold"] is None:
        raise util.error("decide needs --threshold", util.UsageError)
    state = formats.read_state(state_src, state_path)
    domain = formats.read_domain(domain_src, domain_path)
    if domain.dim != state.dim:
        msg = "domain dimension {domain} does not match state dimension {state}".format(
            domain=domain.dim, state=state.dim)
        raise util.error(msg, util.DimensionError)

    decision = wigner.decide_threshold(state, domain, options["threshold"], options["epsilon"], options["delta"],
                                       options["seed"])
    raw, scaled = wigner.domain_sum(wigner.wigner(state), domain)

    report.mode, report.seed, report.shots = scattering.SAMPLED, decision.seed, decision.shots
    report.results = decision.to_dict()
    report.results["delta"] = options["delta"]
    report.results["exact"] = {"raw": raw, "scaled": scaled}
    report.exit_code = VERDICT_EXIT_CODES[decision.verdict]


def compile_program(report, inputs, options):
    """
    Program state for one part (hermitian or anti_hermitian) of an operator file, written with --out
    """
    ((operator_path, operator_src),) = inputs
    part = options["part"]
    if part not in (compiler.HERMITIAN, compiler.ANTI_HERMITIAN):
        raise util.error("unknown part '{part}'".format(part=part), util.UsageError,
                         hints=["Use 'hermitian' or 'anti_hermitian'."])
    operator = formats.read_operator(operator_src, operator_path)
    compilation = compiler.compile_operator(operator)

    report.mode = scattering.EXACT
    report.results = {"dim": operator.dim, "part": part, "scale_h": compilation.scale(compiler.HERMITIAN),
                      "scale_k": compilation.scale(compiler.ANTI_HERMITIAN)}
    program = compilation.program(part)
    if program is None:
        raise util.error("the {part} part of the operator is zero".format(part=part), util.DegenerateProgramError)
    text = formats.write_program(program)
    report.results["points"] = len(program.c)
    if options["out"] is not None:
        formats.store(options["out"], text)
        report.results["program_file"] = options["out"]
    else:
        report.results["program"] = text


def scan(report, inputs, options):
    """
    Covariance residuals of the quadratic-phase cat maps (takes no input file)
    """
    dims = int_list(options["dims"], "--dims")
    shears = int_list(options["shears"], "--shears") if options["shears"] is not None else None
    offsets = int_list(options["offsets"], "--offsets")
    for dim in dims:
        if dim < 2:
            raise util.error("dimensions must be at least 2 (got {dim})".format(dim=dim), util.UsageError)
    rows = wigner.covariance_scan(dims, shears, offsets)

    inexact = [row for row in rows if not row["exact"]]
    if len(inexact) > 0:
        util.warn([(None, "{count} of {total} cat maps are not covariant".format(count=len(inexact),
                                                                                 total=len(rows)))],
                  hints=["Exact cases have shear * dimension + offset even."])
    report.mode = scattering.EXACT
    report.results = {"rows": rows, "exact": len(rows) - len(inexact), "total": len(rows)}


# Command name, function and number of input files
COMMANDS = {
    "expect": (expect, 2),
    "wigner": (wigner_grid, 1),
    "linesum": (linesum, 1),
    "decide": (decide, 2),
    "compile-program": (compile_program, 1),
    "scan": (scan, 0),
}


class OptionParser(optparse.OptionParser):

    def error(self, msg):
        raise util.error(msg, util.UsageError)


def option_parser():
    optparser = OptionParser(usage="usage: %prog command [input_file ...] [options]")
    optparser.add_option("--mode", help="exact or sampled evaluation", default=scattering.EXACT)
    optparser.add_option("--shots", help="shots per measured axis in sampled mode", type="int", default=10000)
    optparser.add_option("--seed", help="seed of the sampled runs", type="int")
    optparser.add_option("--tol", help="circuit-level tolerance", type="float")
    optparser.add_option("-o", "--out", help="output file (CSV grid or program)", dest="out")
    optparser.add_option("--method", help="direct, circuit or both", default="direct")
    optparser.add_option("--shear", help="shear b of the lines p - b q = c", type="int", default=0)
    optparser.add_option("--vertical", help="sum vertical lines q = q0 instead", action="store_true")
    optparser.add_option("--threshold", help="decision threshold on 2N sum of sign*W", type="float")
    optparser.add_option("--epsilon", help="decision margin", type="float", default=0.05)
    optparser.add_option("--delta", help="decision error probability", type="float", default=0.01)
    optparser.add_option("--part", help="hermitian or anti_hermitian", default=compiler.HERMITIAN)
    optparser.add_option("--dims", help="comma-separated dimensions to scan", default="3,4,5,8")
    optparser.add_option("--shears", help="comma-separated shears to scan (default: all)")
    optparser.add_option("--offsets", help="comma-separated offsets to scan", default="0")
    optparser.add_option("--report", help="append the run report to this file")
    optparser.add_option("--traceback", help="show full traceback", action="store_true")
    optparser.add_option("--no-warning-messages", help="disable warning messages", action="store_true")
    optparser.add_option("--no-colored-messages", help="disable colored warning/error messages", action="store_true")
    return optparser


def print_help(optparser):
    sys.stderr.write("The quorum programmable gate array simulator.\n\nCommands:\n\n")
    for cmd, (fn, num_inputs) in sorted(COMMANDS.items()):
        sys.stderr.write("{cmd}: {help}\n".format(cmd=cmd, help=fn.__doc__.strip()))
    sys.stderr.write("\n" + optparser.format_help())


def main(argv=None):
    """
    Runs one command and prints its report; returns the exit code
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    optparser = option_parser()
    try:
        options, args = optparser.parse_args(argv)
    except util.Error as e:
        sys.stderr.write(e.show() + "\n")
        return e.exit_code
    options = vars(options)

    # If no arguments were passed then print help message to the user
    if len(args) == 0:
        print_help(optparser)
        return EXIT_USAGE

    # Get the command which always must be the first argument, followed by its input files
    cmd = args[0]
    if cmd not in COMMANDS:
        sys.stderr.write("error: no command found: {cmd!r}\n".format(cmd=cmd))
        return EXIT_USAGE
    fn, num_inputs = COMMANDS[cmd]
    if len(args) - 1 != num_inputs:
        sys.stderr.write("error: {cmd} takes {num} input file(s)\n".format(cmd=cmd, num=num_inputs))
        return EXIT_USAGE

    directives = (util.CIRCUIT_TOLERANCE, util.SHOW_WARNINGS, util.COLORED_MESSAGES)
    report = reports.RunReport(cmd, argv)
    try:
        if options["tol"] is not None:
            util.CIRCUIT_TOLERANCE = options["tol"]
        util.SHOW_WARNINGS = not options["no_warning_messages"]
        util.COLORED_MESSAGES = not options["no_colored_messages"]

        inputs = []
        for path in args[1:]:
            src = formats.load(path)
            report.add_input(path, src)
            inputs.append((path, src))
        fn(report, inputs, options)
    except util.Error as e:
        if options["traceback"]:
            raise
        sys.stderr.write(e.show() + "\n")
        report.fail(e)
    finally:
        util.CIRCUIT_TOLERANCE, util.SHOW_WARNINGS, util.COLORED_MESSAGES = directives

    report.finish()
    print(report.to_json())
    if options["report"] is not None:
        try:
            report.append_to(options["report"])
        except util.Error as e:
            sys.stderr.write(e.show() + "\n")
            return e.exit_code
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
