"""Decision-tree proof systems: formulas, proof checking, generators and simulations."""
from .axioms import AxiomSet
from .exceptions import DtProofError
from .formula import And, Dec, Ext, Formula, Lit, Or, System
from .proof import Proof, Step, check, stats
from .semantics import eval_formula, is_valid
from .sequent import Sequent
from .syntax import parse_formula

__version__ = "1.0.0"

__all__ = [
    "And",
    "AxiomSet",
    "Dec",
    "DtProofError",
    "Ext",
    "Formula",
    "Lit",
    "Or",
    "Proof",
    "Sequent",
    "Step",
    "System",
    "check",
    "eval_formula",
    "is_valid",
    "parse_formula",
    "stats",
]
