"""Exception hierarchy for dtproof."""
from __future__ import annotations

from typing import Optional


class DtProofError(Exception):
    def __init__(self, code, msg):
        super().__init__()
        self.code = code
        self.msg = msg

    def __str__(self):
        s = f"dtproof error '{self.code}'"
        if self.msg:
            s += f" ({self.msg})"
        return s


class FormulaSyntaxError(DtProofError):
    """Text does not follow the formula, sequent or axiom grammar."""

    def __init__(self, msg: str, text: str = "", position: Optional[int] = None):
        super().__init__("syntax", msg)
        self.text = text
        self.position = position

    def __str__(self):
        s = f"syntax error: {self.msg}"
        if self.position is not None:
            s += f" at position {self.position}"
        if self.text:
            s += f" in {self.text!r}"
        return s


class ProofFormatError(DtProofError):
    """A proof or branching program file could not be read."""

    def __init__(self, msg: str, line: Optional[int] = None):
        super().__init__("format", msg)
        self.line = line

    def __str__(self):
        if self.line is None:
            return f"format error: {self.msg}"
        return f"format error on line {self.line}: {self.msg}"


class AxiomError(DtProofError):
    """Extension axioms are undefined, duplicated, unstratified or clash."""

    def __init__(self, msg: str):
        super().__init__("axioms", msg)


class EvaluationError(DtProofError):
    """A formula was evaluated under a partial assignment."""

    def __init__(self, msg: str):
        super().__init__("evaluation", msg)


class VariableBoundError(DtProofError):
    """Too many variables for the brute-force oracle."""

    def __init__(self, count: int, bound: int):
        super().__init__("bound", f"{count} variables exceed the oracle bound {bound}")
        self.count = count
        self.bound = bound


class PreconditionError(DtProofError):
    """Input outside what a construction or translation accepts."""

    def __init__(self, msg: str):
        super().__init__("precondition", msg)


class InvalidSequentError(PreconditionError):
    """The sequent to be proved is falsified by ``counterexample``."""

    def __init__(self, sequent, counterexample: dict):
        shown = ", ".join(f"{k}={v}" for k, v in counterexample.items())
        super().__init__(f"{sequent} is falsified by {{{shown}}}")
        self.counterexample = counterexample


class RuleError(DtProofError):
    """An inference does not instantiate its rule schema."""

    def __init__(self, msg: str):
        super().__init__("rule", msg)


class CheckFailure(DtProofError):
    def __init__(self, step: Optional[int], reason: str):
        super().__init__("check", reason)
        self.step = step
        self.reason = reason

    def __str__(self):
        if self.step is None:
            return f"proof rejected: {self.reason}"
        return f"proof rejected at step {self.step}: {self.reason}"


class SizeCapExceeded(DtProofError):
    """Tree expansion grew past its cap."""

    def __init__(self, cap: int):
        super().__init__("cap", f"more than {cap} steps")
        self.cap = cap


class UnsupportedRoute(DtProofError):
    """No translation chain connects the requested systems."""

    def __init__(self, source: str, target: str):
        super().__init__("route", f"no translation from {source} to {target}")


class BranchingProgramError(DtProofError):
    def __init__(self, msg: str):
        super().__init__("bp", msg)


class SettingsError(DtProofError):
    """Settings or command parameters failed validation."""

    def __init__(self, msg: str):
        super().__init__("settings", msg)
