class CoincidentParticlesError(ValueError):
    pass


class DomainError(ValueError):
    pass


class SymmetryError(ValueError):
    pass


class SpeedConstraintError(ValueError):
    pass


class CorruptInputError(ValueError):
    pass


class ConvergenceError(ArithmeticError):
    pass


class ToleranceMismatchError(ArithmeticError):
    pass


class DivergenceError(ArithmeticError):
    def __init__(self, step: int, time: float):
        super().__init__(f'non-finite state at step {step} (t = {time:g})')
        self.step = step
        self.time = time


class ConfigFileError(ValueError):
    pass
