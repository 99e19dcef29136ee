"""User-entered field values keyed by property path, pre-materialization."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class SubmissionPayload:
    shape_id: str
    values: dict[str, list[str]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        # normalize: present paths always carry a non-empty value list
        self.values = {path: list(vals) for path, vals in self.values.items() if vals}

    @classmethod
    def from_dict(cls, data: dict) -> "SubmissionPayload":
        if not isinstance(data, dict) or not isinstance(data.get("shape_id"), str):
            raise ValueError("payload must be an object with a 'shape_id' string")
        raw_values = data.get("values", {})
        if not isinstance(raw_values, dict):
            raise ValueError("payload 'values' must map path IRIs to value lists")
        values: dict[str, list[str]] = {}
        for path, vals in raw_values.items():
            if not isinstance(vals, list) or not all(isinstance(v, str) for v in vals):
                raise ValueError(f"values for {path} must be a list of strings")
            values[path] = vals
        return cls(shape_id=data["shape_id"], values=values)

    def to_dict(self) -> dict:
        return {"shape_id": self.shape_id, "values": {p: list(v) for p, v in self.values.items()}}
