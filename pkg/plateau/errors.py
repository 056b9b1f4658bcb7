class PlateauError(Exception):
    """
    Base class for domain failures. Each subclass has a stable code that the
    command line reports and an exit status.
    """

    code = 'plateau-error'
    exit_code = 3


class NotPlateaued(PlateauError):
    code = 'not-plateaued'


class DualNotBentRelative(PlateauError):
    code = 'dual-not-bent-relative'


class HypothesisError(PlateauError):
    code = 'hypothesis-violation'


class DivisibilityViolation(HypothesisError):
    code = 'divisibility-violation'


class InconsistentDistribution(PlateauError):
    code = 'inconsistent-distribution'


class NonIntegralSolution(InconsistentDistribution):
    code = 'non-integral-solution'


class NegativeSolution(InconsistentDistribution):
    code = 'negative-solution'


class DimensionCollapse(PlateauError):
    code = 'dimension-collapse'

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class EmptyDefiningSet(PlateauError):
    code = 'empty-defining-set'


class NotScalingClosed(PlateauError):
    code = 'not-scaling-closed'


class BudgetExceeded(PlateauError):
    code = 'budget-exceeded'

    def __init__(self, required, budget):
        super().__init__('job needs %d operations, budget is %d' %
                         (required, budget))
        self.required = required
        self.budget = budget


class NotAnAccessSet(PlateauError):
    code = 'not-an-access-set'


class PolySyntaxError(ValueError):
    code = 'syntax-error'
    exit_code = 2

    def __init__(self, message, pos):
        super().__init__('%s at position %d' % (message, pos))
        self.pos = pos


class TableFormatError(ValueError):
    code = 'table-format'
    exit_code = 2
