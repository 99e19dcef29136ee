"""Phase-2 validation: named per-property validators and conditional rules.

Syntactic validators (DOI pattern, ORCID and ISSN checksums) are pure and can
run live while the user types; external validators contact a resolver service
and only run at submission time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from urllib.parse import urlparse

import requests

from .payload import SubmissionPayload
from .rdf import Term, blank, iri
from .validation import ValidationResult

REQUIRED_VALIDATOR = "required"

_DOI = re.compile(r"10\.\d{4,9}/\S+", re.IGNORECASE)
_ORCID = re.compile(r"\d{4}-\d{4}-\d{4}-\d{3}[\dX]")
_ISSN = re.compile(r"\d{4}-\d{3}[\dX]")


class ProbeFailure(Exception):
    """The resolver could not be reached (network failure or timeout)."""


@dataclass(frozen=True)
class Condition:
    """True when the payload holds ``equals`` at ``when_path``."""

    when_path: str
    equals: Term


@dataclass(frozen=True)
class ValidatorBinding:
    validator_name: str
    shape_id: str
    path: str
    mode: str  # "syntactic" | "external"
    condition: Condition | None = None


class ResolverProbe:
    """Base client for reachability checks against external services."""

    def __init__(self, timeout: float = 10.0, max_redirects: int = 5) -> None:
        self.timeout = timeout
        self.max_redirects = max_redirects

    def status(self, url: str) -> int:
        raise NotImplementedError


class LiveResolverProbe(ResolverProbe):
    """HEAD request with a GET fallback on 405; redirects are not followed."""

    def status(self, url: str) -> int:
        try:
            response = requests.head(url, timeout=self.timeout, allow_redirects=False)
            if response.status_code == 405:
                response = requests.get(url, timeout=self.timeout, allow_redirects=False)
            return response.status_code
        except requests.RequestException as exc:
            raise ProbeFailure(str(exc)) from exc


class MockResolverProbe(ResolverProbe):
    """Fixture-backed probe for tests; records every requested URL."""

    def __init__(self, fixtures: dict[str, object] | None = None) -> None:
        super().__init__()
        self.fixtures = dict(fixtures or {})
        self.calls: list[str] = []

    def status(self, url: str) -> int:
        self.calls.append(url)
        outcome = self.fixtures.get(url, self.fixtures.get("default", 404))
        if outcome == "timeout":
            raise ProbeFailure("timed out")
        if outcome == "error":
            raise ProbeFailure("connection refused")
        return int(outcome)  # type: ignore[arg-type]


def _violation(component: str, value: str | None, message: str) -> ValidationResult:
    return ValidationResult(
        focus_node=blank("payload"),
        result_path=None,
        component=component,
        offending_value=Term("literal", value) if value is not None else None,
        message=message,
        severity="violation",
        phase="custom",
    )


def _warning(component: str, value: str, message: str) -> ValidationResult:
    return ValidationResult(
        focus_node=blank("payload"),
        result_path=None,
        component=component,
        offending_value=Term("literal", value),
        message=message,
        severity="warning",
        phase="custom",
    )


def doi_syntax(value: str) -> ValidationResult | None:
    if _DOI.fullmatch(value):
        return None
    return _violation("doi_syntax", value, "not a valid DOI: expected 10.<4-9 digits>/<suffix>")


def doi_resolves(value: str, probe: ResolverProbe) -> ValidationResult | None:
    syntax = doi_syntax(value)
    if syntax is not None:
        return syntax
    return _resolve_check("doi_resolves", value, "https://doi.org/" + value, probe,
                          not_found="DOI does not resolve")


def url_reachable(value: str, probe: ResolverProbe) -> ValidationResult | None:
    parsed = urlparse(value)
    if parsed.scheme not in ("http", "https") or not parsed.netloc:
        return _violation("url_reachable", value, "not an absolute URL")
    return _resolve_check("url_reachable", value, value, probe, not_found="URL is not reachable")


def _resolve_check(
    component: str, value: str, url: str, probe: ResolverProbe, not_found: str
) -> ValidationResult | None:
    try:
        status = probe.status(url)
    except ProbeFailure as exc:
        return _warning(component, value, f"could not verify {value!r}: {exc}")
    if 200 <= status < 400:
        return None
    if 400 <= status < 500:
        return _violation(component, value, f"{not_found} (HTTP {status})")
    return _warning(component, value, f"could not verify {value!r}: the resolver answered HTTP {status}")


def orcid_checksum(value: str) -> ValidationResult | None:
    """ISO 7064 MOD 11-2 check over the 16-character ORCID form."""
    if not _ORCID.fullmatch(value):
        return _violation("orcid_checksum", value, "not a valid ORCID: expected dddd-dddd-dddd-dddX")
    digits = value.replace("-", "")
    total = 0
    for ch in digits[:15]:
        total = (total + int(ch)) * 2
    check = (12 - total % 11) % 11
    expected = "X" if check == 10 else str(check)
    if digits[15] != expected:
        return _violation("orcid_checksum", value, "ORCID check digit mismatch")
    return None


def issn_checksum(value: str) -> ValidationResult | None:
    """Weighted-sum check (weights 8..2, check digit X = 10) modulo 11."""
    if not _ISSN.fullmatch(value):
        return _violation("issn_checksum", value, "not a valid ISSN: expected dddd-dddX")
    digits = value.replace("-", "")
    total = sum(int(d) * w for d, w in zip(digits[:7], range(8, 1, -1)))
    check = 10 if digits[7] == "X" else int(digits[7])
    if (total + check) % 11 != 0:
        return _violation("issn_checksum", value, "ISSN check digit mismatch")
    return None


class ValidatorRegistry:
    """Named validator functions; immutable after startup."""

    def __init__(self) -> None:
        self._syntactic = {
            "doi_syntax": doi_syntax,
            "orcid_checksum": orcid_checksum,
            "issn_checksum": issn_checksum,
        }
        self._external = {
            "doi_resolves": doi_resolves,
            "url_reachable": url_reachable,
        }

    def knows(self, name: str) -> bool:
        return name == REQUIRED_VALIDATOR or name in self._syntactic or name in self._external

    def is_external(self, name: str) -> bool:
        return name in self._external

    def syntactic_names(self) -> list[str]:
        return sorted(self._syntactic)

    def run(self, name: str, value: str, probe: ResolverProbe | None) -> ValidationResult | None:
        if name in self._syntactic:
            return self._syntactic[name](value)
        if name in self._external:
            if probe is None:
                raise LookupError(f"external validator {name!r} needs a resolver probe")
            return self._external[name](value, probe)
        raise LookupError(f"unknown validator {name!r}")


def default_registry() -> ValidatorRegistry:
    return ValidatorRegistry()


def eval_condition(condition: Condition, payload: SubmissionPayload) -> bool:
    """True iff the payload holds the expected term text at the condition path."""
    values = payload.values.get(condition.when_path, [])
    return any(condition.equals.value == raw for raw in values)


def run_phase2(
    payload: SubmissionPayload,
    bindings: list[ValidatorBinding],
    registry: ValidatorRegistry,
    probe: ResolverProbe | None,
    focus: Term | None = None,
) -> list[ValidationResult]:
    """Apply every applicable binding to the payload, in declaration order.

    A binding with a false condition is skipped entirely; external validators
    are therefore never probed for payloads that do not meet the condition.
    The pseudo-validator "required" flags a conditionally mandatory path with
    no value.
    """
    focus_term = focus if focus is not None else blank("payload")
    results: list[ValidationResult] = []
    for binding in bindings:
        if binding.condition is not None and not eval_condition(binding.condition, payload):
            continue
        values = payload.values.get(binding.path, [])
        if binding.validator_name == REQUIRED_VALIDATOR:
            if not values:
                results.append(
                    ValidationResult(
                        focus_node=focus_term,
                        result_path=binding.path,
                        component=REQUIRED_VALIDATOR,
                        offending_value=None,
                        message=f"a value for <{binding.path}> is required",
                        severity="violation",
                        phase="custom",
                    )
                )
            continue
        for value in values:
            found = registry.run(binding.validator_name, value, probe)
            if found is not None:
                results.append(replace(found, focus_node=focus_term, result_path=binding.path))
    return results
