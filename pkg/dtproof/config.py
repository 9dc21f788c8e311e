"""Settings, command parameter schemas and the translation routing table."""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Tuple

import voluptuous as vol

from .const import (
    CONF_HEIGHT_CONSTANT,
    CONF_MAX_VARS,
    CONF_TREE_CAP,
    DEFAULT_HEIGHT_CONSTANT,
    DEFAULT_MAX_VARS,
    DEFAULT_TREE_CAP,
    ENV_MAX_VARS,
    MODE_DAG,
    MODE_TREE,
    REPORT_SCHEMA_VERSION,
)
from .exceptions import DtProofError, SettingsError
from .formula import Lit
from .logutil import get_logger
from .sequent import Sequent
from .syntax import parse_cedent, parse_formula

logger = get_logger(__file__)


SETTINGS_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_MAX_VARS, default=DEFAULT_MAX_VARS): vol.All(vol.Coerce(int), vol.Range(min=1, max=30)),
        vol.Optional(CONF_TREE_CAP, default=DEFAULT_TREE_CAP): vol.All(vol.Coerce(int), vol.Range(min=1)),
        vol.Optional(CONF_HEIGHT_CONSTANT, default=DEFAULT_HEIGHT_CONSTANT): vol.All(
            vol.Coerce(int), vol.Range(min=1, max=64)
        ),
    }
)


@dataclass(frozen=True)
class Settings:
    max_vars: int = DEFAULT_MAX_VARS
    tree_cap: int = DEFAULT_TREE_CAP
    height_constant: int = DEFAULT_HEIGHT_CONSTANT


def load_settings(env: Mapping[str, str] = os.environ, overrides: Optional[Mapping[str, Any]] = None) -> Settings:
    """Defaults, then ``DTPROOF_MAX_VARS``, then explicit overrides."""
    data: Dict[str, Any] = {}
    if ENV_MAX_VARS in env:
        data[CONF_MAX_VARS] = env[ENV_MAX_VARS]
    data.update({k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        valid = SETTINGS_SCHEMA(data)
    except vol.Invalid as err:
        raise SettingsError(str(err)) from err
    logger.debug("settings: %s", valid)
    return Settings(valid[CONF_MAX_VARS], valid[CONF_TREE_CAP], valid[CONF_HEIGHT_CONSTANT])


# Value validators for command parameters
def _parsed(parse, what: str):
    def validator(value: Any):
        if not isinstance(value, str):
            raise vol.Invalid(f"expected {what} text")
        try:
            return parse(value)
        except DtProofError as err:
            raise vol.Invalid(f"bad {what}: {err}") from err

    return validator


FormulaValue = _parsed(parse_formula, "formula")
SequentValue = _parsed(Sequent.parse, "sequent")


def LiteralValue(value: Any) -> Lit:
    f = FormulaValue(value)
    if not isinstance(f, Lit):
        raise vol.Invalid(f"{f} is not a literal")
    return f


def LiteralList(value: Any) -> List[Lit]:
    items = _parsed(parse_cedent, "literal list")(value)
    if not items or not all(isinstance(f, Lit) for f in items):
        raise vol.Invalid("expected a nonempty comma separated list of literals")
    return items


MODE = vol.In([MODE_TREE, MODE_DAG])

_DECISION_PARAMS = {
    vol.Required("formula"): FormulaValue,
    vol.Optional("variant", default="a"): vol.In(list("abcdefg")),
    vol.Optional("literal"): LiteralValue,
    vol.Optional("second"): FormulaValue,
    vol.Optional("mode", default=MODE_TREE): MODE,
}

FAMILY_SCHEMAS: Dict[str, vol.Schema] = {
    "identity": vol.Schema(_DECISION_PARAMS),
    "ndtnf": vol.Schema(_DECISION_PARAMS),
    "conjdisj": vol.Schema(
        {
            vol.Required("ps"): LiteralList,
            vol.Required("qs"): LiteralList,
            vol.Optional("variant", default="a"): vol.In(list("abcdef")),
            vol.Optional("mode", default=MODE_TREE): MODE,
        }
    ),
    "clstms": vol.Schema(
        {
            vol.Required("formula"): FormulaValue,
            vol.Optional("mode", default="tree-atomic-cut"): vol.In(["tree-atomic-cut", "dag-cutfree"]),
        }
    ),
    "sigmapi": vol.Schema(
        {
            vol.Required("formula"): FormulaValue,
            vol.Optional("term", default=0): vol.All(vol.Coerce(int), vol.Range(min=0)),
            vol.Optional("clause", default=0): vol.All(vol.Coerce(int), vol.Range(min=0)),
        }
    ),
    "andor": vol.Schema(
        {
            vol.Required("formula"): FormulaValue,
            vol.Required("second"): FormulaValue,
            vol.Optional("variant", default="a"): vol.In(list("abcdef")),
            vol.Optional("axioms"): str,
        }
    ),
    "rename": vol.Schema(
        {
            vol.Required("formula"): FormulaValue,
            vol.Optional("axioms"): str,
            vol.Optional("backward", default=False): vol.Boolean(),
        }
    ),
    "cutfree": vol.Schema(
        {
            vol.Required("sequent"): SequentValue,
            vol.Optional("system"): str,
        }
    ),
}


def validate_params(family: str, params: Mapping[str, Any]) -> Dict[str, Any]:
    if family not in FAMILY_SCHEMAS:
        raise SettingsError(f"unknown family {family!r}; choose from {', '.join(sorted(FAMILY_SCHEMAS))}")
    try:
        return FAMILY_SCHEMAS[family](dict(params))
    except vol.Invalid as err:
        raise SettingsError(f"{family}: {err}") from err


REPORT_SCHEMA = vol.Schema(
    {
        vol.Required("schema"): REPORT_SCHEMA_VERSION,
        vol.Required("command"): str,
        vol.Required("inputs"): dict,
        vol.Required("outcome"): vol.In(["ok", "failed", "error"]),
        vol.Required("stats"): dict,
        vol.Required("timing"): vol.All(vol.Coerce(float), vol.Range(min=0)),
    }
)


def validate_report(report: Mapping[str, Any]) -> Dict[str, Any]:
    try:
        return REPORT_SCHEMA(dict(report))
    except vol.Invalid as err:
        raise SettingsError(f"malformed report: {err}") from err


# (source system, target system) -> simulations applied in order
ROUTES: Dict[Tuple[str, str], List[str]] = {
    ("dLK(1)", "LDT"): ["1lk-to-ldt"],
    ("LDT", "dLK(1)"): ["ldt-to-1lk"],
    ("LNDT", "LDT"): ["treelndt-to-ldt"],
    ("LDT", "LNDT"): ["ldt-to-treelndt"],
    ("LNDT", "dLK(2)"): ["lndt-to-2lk"],
    ("LDT", "dLK(2)"): ["lndt-to-2lk"],
    ("dLK(2)", "LNDT"): ["2lk-to-lndt"],
    ("dLK(2)", "LDT"): ["2lk-to-lndt", "treelndt-to-ldt"],
    ("dLK(1)", "dLK(2)"): ["1lk-to-ldt", "lndt-to-2lk"],
    ("LK", "eLDT"): ["lk-to-eldt"],
    ("dLK(1)", "eLDT"): ["lk-to-eldt"],
    ("dLK(2)", "eLDT"): ["lk-to-eldt"],
    ("eLNDT", "LK"): ["elndt-to-lk"],
    ("eLDT", "LK"): ["elndt-to-lk"],
    ("LNDT", "LK"): ["elndt-to-lk"],
    ("LDT", "LK"): ["elndt-to-lk"],
}


ASSIGNMENT_SCHEMA = vol.Schema({vol.Match(r"^\w+$"): vol.All(vol.Coerce(int), vol.In([0, 1]))})


def parse_assignment(text: str) -> Dict[str, int]:
    """``w=1,x=0`` as a variable assignment."""
    pairs: Dict[str, str] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        var, sep, value = item.partition("=")
        if not sep:
            raise SettingsError(f"expected var=0|1, got {item!r}")
        pairs[var.strip()] = value.strip()
    try:
        return ASSIGNMENT_SCHEMA(pairs)
    except vol.Invalid as err:
        raise SettingsError(f"bad assignment: {err}") from err
