"""Proof files.

A proof file starts with ``key: value`` headers and then lists its steps in order::

    system: LDT
    mode: tree
    axioms: majority4.ax
    0: p |- p ; ax
    1: p |- p, q ; w-r(q) 0   # optional note

Extension axioms may also be given inline as ``$e := <formula>`` lines. The
``axioms:`` path is resolved against the directory of the proof file.
"""
from __future__ import annotations

import re
from pathlib import Path
from typing import List, Optional, Union

from .axioms import EMPTY, AxiomSet
from .const import MODE_DAG, MODE_TREE
from .exceptions import DtProofError, ProofFormatError
from .formula import System
from .logutil import get_logger
from .proof import Proof, Step
from .rules import ALL_RULES
from .sequent import Sequent
from .syntax import AXIOM_LINE_RE, parse_formula

logger = get_logger(__file__)

HEADER_RE = re.compile(r"(?P<key>system|mode|axioms)\s*:\s*(?P<value>.+)")
STEP_RE = re.compile(
    r"(?P<index>\d+)\s*:\s*(?P<sequent>[^;]*);\s*(?P<rule>[a-z-]+)"
    r"(?:\((?P<principal>.*)\))?\s*(?P<premises>[\d\s]*)"
)


def _split_note(line: str):
    if "#" not in line:
        return line.strip(), None
    body, note = line.split("#", 1)
    return body.strip(), note.strip() or None


def read_proof(text: str, base: Optional[Path] = None, axioms: Optional[AxiomSet] = None) -> Proof:
    """Parse a proof; ``axioms`` replaces any axioms the file names or lists."""
    system: Optional[System] = None
    mode = MODE_DAG
    file_axioms: Optional[AxiomSet] = None
    inline: List[str] = []
    steps: List[Step] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line, note = _split_note(raw)
        if not line:
            continue
        try:
            if AXIOM_LINE_RE.fullmatch(line):
                inline.append(line)
                continue
            header = HEADER_RE.fullmatch(line)
            if header and not steps:
                key, value = header.group("key"), header.group("value").strip()
                if key == "system":
                    system = System.parse(value)
                elif key == "mode":
                    if value not in (MODE_TREE, MODE_DAG):
                        raise ProofFormatError(f"mode must be {MODE_TREE} or {MODE_DAG}, got {value!r}", number)
                    mode = value
                else:
                    path = Path(value) if base is None else base / value
                    file_axioms = AxiomSet.parse(path.read_text())
                continue
            steps.append(_read_step(line, note, len(steps), number))
        except ProofFormatError:
            raise
        except DtProofError as err:
            raise ProofFormatError(str(err), number) from err
    if system is None:
        raise ProofFormatError("missing 'system:' header")
    if not steps:
        raise ProofFormatError("the proof has no steps")
    if axioms is None:
        axioms = file_axioms or EMPTY
        if inline:
            axioms = axioms.union(AxiomSet.parse("\n".join(inline)))
    logger.debug("read a %s %s proof with %d steps", system, mode, len(steps))
    return Proof(system, mode, tuple(steps), axioms)


def _read_step(line: str, note: Optional[str], expected: int, number: int) -> Step:
    match = STEP_RE.fullmatch(line)
    if not match:
        raise ProofFormatError(f"cannot read {line!r}", number)
    index = int(match.group("index"))
    if index != expected:
        raise ProofFormatError(f"expected step {expected}, found {index}", number)
    rule = match.group("rule")
    if rule not in ALL_RULES:
        raise ProofFormatError(f"unknown rule {rule!r}", number)
    premises = tuple(int(j) for j in match.group("premises").split())
    for j in premises:
        if j >= index:
            raise ProofFormatError(f"step {index} cites step {j}, which does not precede it", number)
    principal = match.group("principal")
    return Step(
        Sequent.parse(match.group("sequent")),
        rule,
        premises,
        parse_formula(principal) if principal else None,
        note,
    )


def write_proof(proof: Proof, axioms_path: Optional[Union[str, Path]] = None, notes: bool = True) -> str:
    """Text form of ``proof``; axioms are written inline unless ``axioms_path`` is given."""
    lines = [f"system: {proof.system}", f"mode: {proof.mode}"]
    if axioms_path is not None:
        lines.append(f"axioms: {axioms_path}")
    elif len(proof.axioms):
        lines.extend(proof.axioms.format().splitlines())
    for k, step in enumerate(proof.steps):
        rule = step.rule if step.principal is None else f"{step.rule}({step.principal})"
        line = f"{k}: {step.sequent} ; {rule}"
        if step.premises:
            line += " " + " ".join(map(str, step.premises))
        if notes and step.note:
            line += f"   # {step.note}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def load_proof(path: Union[str, Path], axioms: Optional[AxiomSet] = None) -> Proof:
    path = Path(path)
    return read_proof(path.read_text(), path.parent, axioms)


def save_proof(proof: Proof, path: Union[str, Path], notes: bool = True) -> None:
    Path(path).write_text(write_proof(proof, notes=notes))
