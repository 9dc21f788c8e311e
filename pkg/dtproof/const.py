"""Constants for the dtproof toolkit."""
from __future__ import annotations

from typing import Final

PACKAGE: Final = "dtproof"

# Reserved variable behind the 0/1 and top/bottom encodings
CONST_VAR: Final = "_c"

# Configuration
ENV_MAX_VARS: Final = "DTPROOF_MAX_VARS"
CONF_MAX_VARS: Final = "max_vars"
CONF_TREE_CAP: Final = "tree_cap"
CONF_HEIGHT_CONSTANT: Final = "height_constant"

# Default values
DEFAULT_MAX_VARS: Final = 24
DEFAULT_TREE_CAP: Final = 200_000
DEFAULT_HEIGHT_CONSTANT: Final = 4
FRESH_DIGEST_LENGTH: Final = 6

# Exit codes
EXIT_OK: Final = 0
EXIT_CHECK_FAILED: Final = 1
EXIT_IO_ERROR: Final = 2

# Systems
SYSTEM_LDT: Final = "LDT"
SYSTEM_LNDT: Final = "LNDT"
SYSTEM_ELDT: Final = "eLDT"
SYSTEM_ELNDT: Final = "eLNDT"
SYSTEM_LK: Final = "LK"
SYSTEM_DLK: Final = "dLK"

# Formula classes
CLASS_DT: Final = "DT"
CLASS_NDT: Final = "NDT"
CLASS_EDT: Final = "eDT"
CLASS_ENDT: Final = "eNDT"
CLASS_LK: Final = "LK"
CLASS_ELK: Final = "eLK"

# Proof modes
MODE_TREE: Final = "tree"
MODE_DAG: Final = "dag"

# Rule tags
RULE_AXIOM: Final = "ax"
RULE_EXTENSION: Final = "ext"
RULE_WEAKEN_LEFT: Final = "w-l"
RULE_WEAKEN_RIGHT: Final = "w-r"
RULE_CONTRACT_LEFT: Final = "c-l"
RULE_CONTRACT_RIGHT: Final = "c-r"
RULE_CUT: Final = "cut"
RULE_DEC_LEFT: Final = "dec-l"
RULE_DEC_RIGHT: Final = "dec-r"
RULE_OR_LEFT: Final = "or-l"
RULE_OR_RIGHT: Final = "or-r"
RULE_AND_LEFT: Final = "and-l"
RULE_AND_RIGHT: Final = "and-r"

# Reports
REPORT_SCHEMA_VERSION: Final = 1
