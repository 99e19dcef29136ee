// Client-side mirrors of the live checks the form schema declares:
// datatype lexical forms, patterns, allowed values, and the syntactic
// identifier validators. The server re-checks everything on submission.

import type { FormField } from "./types.js";

const XSD = "http://www.w3.org/2001/XMLSchema#";

const INTEGER_RE = /^[+-]?[0-9]+$/;
const DECIMAL_RE = /^[+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)$/;
const DATE_RE = /^-?([0-9]{4,})-([0-9]{2})-([0-9]{2})(Z|[+-][0-9]{2}:[0-9]{2})?$/;
const DATETIME_RE =
  /^-?([0-9]{4,})-([0-9]{2})-([0-9]{2})T([0-9]{2}):([0-9]{2}):([0-9]{2})(\.[0-9]+)?(Z|[+-][0-9]{2}:[0-9]{2})?$/;

const DOI_RE = /^10\.[0-9]{4,9}\/\S+$/i;
const ORCID_RE = /^[0-9]{4}-[0-9]{4}-[0-9]{4}-[0-9]{3}[0-9X]$/;
const ISSN_RE = /^[0-9]{4}-[0-9]{3}[0-9X]$/;

function daysInMonth(year: number, month: number): number {
  const table = [31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31];
  const leap = year % 4 === 0 && (year % 100 !== 0 || year % 400 === 0);
  if (month === 2 && leap) return 29;
  return table[month - 1] ?? 0;
}

function validDateParts(year: number, month: number, day: number): boolean {
  return month >= 1 && month <= 12 && day >= 1 && day <= daysInMonth(year, month);
}

export function checkDatatype(value: string, datatype: string): string | null {
  switch (datatype) {
    case XSD + "string":
      return null;
    case XSD + "integer":
      return INTEGER_RE.test(value) ? null : "not a valid integer";
    case XSD + "decimal":
      return DECIMAL_RE.test(value) ? null : "not a valid decimal";
    case XSD + "boolean":
      return ["true", "false", "1", "0"].includes(value) ? null : "not a valid boolean";
    case XSD + "date": {
      const m = DATE_RE.exec(value);
      if (!m) return "not a valid date (YYYY-MM-DD)";
      return validDateParts(Number(m[1]), Number(m[2]), Number(m[3]))
        ? null
        : "not a valid calendar date";
    }
    case XSD + "dateTime": {
      const m = DATETIME_RE.exec(value);
      if (!m) return "not a valid dateTime";
      if (!validDateParts(Number(m[1]), Number(m[2]), Number(m[3]))) {
        return "not a valid calendar date";
      }
      const [hour, minute, second] = [Number(m[4]), Number(m[5]), Number(m[6])];
      if (hour === 24 && (minute !== 0 || second !== 0)) return "invalid time of day";
      if (hour > 24 || minute > 59 || second > 59) return "invalid time of day";
      return null;
    }
    case XSD + "anyURI":
      return /\s/.test(value) ? "not a valid URI" : null;
    default:
      return null; // unknown datatypes pass; the server decides
  }
}

export function doiSyntax(value: string): string | null {
  return DOI_RE.test(value) ? null : "not a valid DOI: expected 10.<4-9 digits>/<suffix>";
}

export function orcidChecksum(value: string): string | null {
  if (!ORCID_RE.test(value)) return "not a valid ORCID: expected dddd-dddd-dddd-dddX";
  const digits = value.replace(/-/g, "");
  let total = 0;
  for (const ch of digits.slice(0, 15)) total = (total + Number(ch)) * 2;
  const check = (12 - (total % 11)) % 11;
  const expected = check === 10 ? "X" : String(check);
  return digits[15] === expected ? null : "ORCID check digit mismatch";
}

export function issnChecksum(value: string): string | null {
  if (!ISSN_RE.test(value)) return "not a valid ISSN: expected dddd-dddX";
  const digits = value.replace(/-/g, "");
  let total = 0;
  for (let i = 0; i < 7; i++) total += Number(digits[i]) * (8 - i);
  const check = digits[7] === "X" ? 10 : Number(digits[7]);
  return (total + check) % 11 === 0 ? null : "ISSN check digit mismatch";
}

const SYNTACTIC_VALIDATORS: Record<string, (value: string) => string | null> = {
  doi_syntax: doiSyntax,
  orcid_checksum: orcidChecksum,
  issn_checksum: issnChecksum,
};

export function runLiveChecks(field: FormField, value: string): string[] {
  if (value === "") return [];
  const errors: string[] = [];
  for (const check of field.live_checks) {
    if (check.kind === "pattern") {
      // search semantics: an unanchored pattern may match anywhere
      if (!new RegExp(String(check.argument)).test(value)) {
        errors.push(`does not match ${String(check.argument)}`);
      }
    } else if (check.kind === "datatype") {
      const problem = checkDatatype(value, String(check.argument));
      if (problem) errors.push(problem);
    } else if (check.kind === "in_list") {
      const allowed = check.argument as string[];
      if (!allowed.includes(value)) errors.push("not one of the allowed values");
    } else if (check.kind === "validator") {
      const validator = SYNTACTIC_VALIDATORS[String(check.argument)];
      if (validator) {
        const problem = validator(value);
        if (problem) errors.push(problem);
      }
    }
  }
  return errors;
}
