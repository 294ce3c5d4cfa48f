import collections
from quorum import util
from quorum.passes import expansion, splitting, normalization
from quorum.passes.expansion import expand
from quorum.passes.splitting import hermitian_split, HERMITIAN, ANTI_HERMITIAN
from quorum.passes.normalization import compile_program
from quorum.programs import OperatorSpec, ProgramState, decompile, program_vector


PASSES = collections.OrderedDict((
    (expansion.PASS_NAME, expansion.Expander),
    (splitting.PASS_NAME, splitting.Splitter),
    (normalization.PASS_NAME, normalization.Normalizer),
))


class Compilation(util.Repr):
    """
    Everything the passes learn about one operator: its coefficients, their hermitian and anti-hermitian parts and
    the programs evaluating each part (None for a part that vanishes).
    """

    def __init__(self, operator):
        self.operator = operator
        self.dim = operator.dim
        self.passes = []
        self.coefficients = None
        self.parts = None
        self.programs = None

    def program(self, part):
        return self.programs[part]

    def scale(self, part):
        program = self.programs[part]
        return 0.0 if program is None else program.scale

    def is_degenerate(self):
        return all(program is None for program in self.programs.values())


def compile_operator(operator, last_pass=None):
    """
    Takes an OperatorSpec and runs the passes over it, stopping after `last_pass` when given. Returns the
    Compilation holding the result of every pass executed.
    """
    if last_pass is not None and last_pass not in PASSES:
        msg = "no compiler pass named '{name}'".format(name=last_pass)
        raise util.error(msg, util.UsageError, hints=["Passes are: " + ", ".join(PASSES) + "."])

    compilation = Compilation(operator)
    for pass_name, ProcessorClass in PASSES.items():
        processor = ProcessorClass(compilation)
        processor.process()
        if last_pass is not None and pass_name == last_pass:
            break
    return compilation
