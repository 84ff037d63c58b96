#!/usr/bin/env python3
# www.jrodal.com


class ForgeError(Exception):
    pass


class NotAPartition(ForgeError, ValueError):
    pass


class TooManyRows(ForgeError):
    pass


class NotContained(ForgeError):
    pass


class ResourceBound(ForgeError):
    pass


class IndexOutOfRange(ForgeError, ValueError):
    pass


class UnsupportedDim(ForgeError, ValueError):
    pass


class ZeroState(ForgeError):
    pass


class BadArity(ForgeError, ValueError):
    pass


class ConditionViolation(ForgeError):
    def __init__(self, step: int, condition: int, detail: str = "") -> None:
        self.step = step
        self.condition = condition
        message = f"Condition {condition} violated at step {step}"
        super().__init__(f"{message}: {detail}" if detail else message)
