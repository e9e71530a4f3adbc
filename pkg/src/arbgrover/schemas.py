"""JSON Schemas for ``--format json`` output of the CLI commands."""

_NUM_OR_NULL = {"type": ["number", "null"]}

PREPARE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "arbgrover prepare",
    "type": "object",
    "required": ["N", "qubits", "gate_count", "depth"],
    "properties": {
        "N": {"type": "integer", "minimum": 2},
        "qubits": {"type": "integer", "minimum": 1},
        "gate_count": {"type": "integer", "minimum": 0},
        "depth": {"type": "integer", "minimum": 0},
        "p_max": {"type": "number"},
        "p_min": {"type": "number"},
        "p_spread": {"type": "number"},
        "leakage": {"type": "number"},
        "qasm": {"type": "string"},
    },
    "additionalProperties": False,
}

SEARCH = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "arbgrover search",
    "type": "object",
    "required": [
        "N",
        "n",
        "M",
        "marked",
        "iterations_used",
        "oracle_calls",
        "success_probability",
        "theoretical_probability",
        "t_old",
        "t_new",
        "eta_percent",
        "shots",
        "seed",
        "histogram",
    ],
    "properties": {
        "N": {"type": "integer", "minimum": 2},
        "n": {"type": "integer", "minimum": 1},
        "M": {"type": "integer", "minimum": 1},
        "marked": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 1},
        "iterations_used": {"type": "integer", "minimum": 0},
        "oracle_calls": {"type": "integer", "minimum": 0},
        "success_probability": {"type": "number", "minimum": 0, "maximum": 1},
        "theoretical_probability": {"type": "number", "minimum": 0, "maximum": 1},
        "t_old": {"type": "integer", "minimum": 0},
        "t_new": {"type": "integer", "minimum": 0},
        "eta_percent": _NUM_OR_NULL,
        "shots": {"type": ["integer", "null"], "minimum": 1},
        "seed": {"type": ["integer", "null"]},
        "histogram": {
            "type": ["object", "null"],
            "propertyNames": {"pattern": "^[0-9]+$"},
            "additionalProperties": {"type": "integer", "minimum": 1},
        },
    },
    "additionalProperties": False,
}

COMPARE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "arbgrover compare",
    "type": "object",
    "required": [
        "N",
        "n",
        "M",
        "T_old",
        "T_new",
        "f",
        "eta_percent",
        "f_asymptotic",
        "eta_asymptotic_percent",
    ],
    "properties": {
        "N": {"type": "integer", "minimum": 2},
        "n": {"type": "integer", "minimum": 1},
        "M": {"type": "integer", "minimum": 1},
        "T_old": {"type": "integer", "minimum": 0},
        "T_new": {"type": "integer", "minimum": 0},
        "f": _NUM_OR_NULL,
        "eta_percent": _NUM_OR_NULL,
        "f_asymptotic": {"type": "number", "minimum": 1},
        "eta_asymptotic_percent": {"type": "number", "minimum": 0},
    },
    "additionalProperties": False,
}
