# -*- coding:utf-8 -*-
"""Exception hierarchy shared by every gssflab sub-package."""


class GssfLabError(Exception):
    """Base class for all errors raised by gssflab."""


class SlotIndexError(GssfLabError, ValueError):
    pass


class VarianceMismatchError(GssfLabError, ValueError):
    pass


class MetricInversionError(GssfLabError, ValueError):
    def __init__(self, message, cond=float("inf")):
        super().__init__("{0} (condition number {1:.3e})".format(message, cond))
        self.cond = cond


class FieldEvaluationError(GssfLabError, ValueError):
    def __init__(self, message, point=None):
        if point is not None:
            message = "{0} at point {1}".format(message, [float(v) for v in point])
        super().__init__(message)
        self.point = point


class ImmersionError(GssfLabError, ValueError):
    pass


class InvalidNormalError(GssfLabError, ValueError):
    pass


class DegeneratePlaneError(GssfLabError, ValueError):
    pass


class CatalogError(GssfLabError, KeyError):
    def __init__(self, kind, name, valid):
        self.kind = kind
        self.name = name
        self.valid = tuple(valid)
        super().__init__(
            "unknown {0} {1!r}; valid names: {2}".format(kind, name, ", ".join(self.valid))
        )

    def __str__(self):
        return self.args[0]


class PreconditionError(GssfLabError):
    pass


class ConfigError(GssfLabError, ValueError):
    pass
