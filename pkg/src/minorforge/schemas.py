"""JSON Schemas for the machine-readable CLI outputs."""

_int_list = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_nullable_int = {"type": ["integer", "null"]}
_status = {"type": "object", "additionalProperties": {"enum": ["exact", "timeout"]}}
_model = {"type": "array", "items": _int_list}

TRACE = {
    "type": "object",
    "required": ["claw", "steps", "k", "D", "S"],
    "properties": {
        "claw": {
            "type": "object",
            "required": ["center", "leaves"],
            "properties": {
                "center": {"type": "integer"},
                "leaves": {**_int_list, "minItems": 3, "maxItems": 3},
            },
        },
        "steps": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["anchor", "u", "v"],
                "properties": {k: {"type": "integer"} for k in ("anchor", "u", "v")},
            },
        },
        "k": {"type": "integer", "minimum": 0},
        "D": _int_list,
        "S": _int_list,
    },
}

INVARIANTS = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["graph6", "n", "alpha", "omega", "chi", "h", "clawfree", "status"],
        "properties": {
            "graph6": {"type": "string"},
            "n": {"type": "integer"},
            "alpha": _nullable_int,
            "alpha_witness": _int_list,
            "omega": _nullable_int,
            "omega_witness": _int_list,
            "chi": _nullable_int,
            "chi_witness": _int_list,
            "h": _nullable_int,
            "h_witness": {"anyOf": [_model, {"type": "null"}]},
            "clawfree": {"type": "boolean"},
            "status": _status,
        },
    },
}

DOMSET = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["graph6", "applicable", "reason", "trace"],
        "properties": {
            "graph6": {"type": "string"},
            "applicable": {"type": "boolean"},
            "reason": {"type": ["string", "null"]},
            "trace": {"anyOf": [TRACE, {"type": "null"}]},
            "verified": {"type": "boolean"},
        },
    },
}

PEEL = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["graph6", "levels", "model", "achieved"],
        "properties": {
            "graph6": {"type": "string"},
            "achieved": {"type": "integer", "minimum": 0},
            "model": _model,
            "levels": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["case", "depth", "vertices", "D", "remaining_order", "remaining_alpha", "trace"],
                    "properties": {
                        "case": {"enum": ["disconnected", "clawfree-fallback", "small-alpha-fallback",
                                          "small-order-fallback", "peel"]},
                        "depth": {"type": "integer"},
                        "vertices": _int_list,
                        "D": {"anyOf": [_int_list, {"type": "null"}]},
                        "remaining_order": {"type": "integer"},
                        "remaining_alpha": _nullable_int,
                        "trace": {"anyOf": [TRACE, {"type": "null"}]},
                        "exact": {"type": ["boolean", "null"]},
                    },
                },
            },
        },
    },
}

_rational = {"type": ["string", "null"], "pattern": r"^-?\d+(/\d+)?$"}

BOUND_REPORT = {
    "type": "object",
    "required": ["graph6", "n", "alpha", "omega", "chi", "h", "status", "chi_le_h", "bounds"],
    "properties": {
        "graph6": {"type": "string"},
        "n": {"type": "integer"},
        "alpha": _nullable_int,
        "omega": _nullable_int,
        "chi": _nullable_int,
        "h": _nullable_int,
        "status": _status,
        "chi_le_h": {"type": ["boolean", "null"]},
        "bounds": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["applicable", "bound", "satisfied", "status", "slack"],
                "properties": {
                    "applicable": {"type": ["boolean", "null"]},
                    "bound": _rational,
                    "satisfied": {"type": ["boolean", "null"]},
                    "status": {"enum": ["pass", "fail", "n/a", "undecided"]},
                    "slack": _rational,
                },
            },
        },
    },
}

VERIFY = {
    "type": "object",
    "required": ["summary", "reports"],
    "properties": {
        "summary": {
            "type": "object",
            "required": ["checked", "satisfied", "undecided", "violations", "skipped", "per_formula"],
            "properties": {
                k: {"type": "integer", "minimum": 0}
                for k in ("checked", "satisfied", "undecided", "violations", "skipped", "hadwiger_violations")
            },
        },
        "reports": {"type": "array", "items": BOUND_REPORT},
    },
}

BOUNDS_TABLE = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["alpha", "h", "best", "best_value"],
        "properties": {
            "alpha": {"type": "integer"},
            "h": {"type": "integer"},
            "best": {"type": "string"},
            "best_value": _rational,
        },
        "additionalProperties": _rational,
    },
}

SCHEMAS = {
    "invariants": INVARIANTS,
    "domset": DOMSET,
    "peel": PEEL,
    "verify": VERIFY,
    "bounds-table": BOUNDS_TABLE,
}
