// Wire types for the service API: form schemas, payloads, and reports.

export const SUPPORTED_SCHEMA_VERSION = "1";

export type Widget = "select" | "text" | "url";

export interface FormOption {
  value: string;
  label: string;
}

export interface LiveCheck {
  kind: "pattern" | "datatype" | "in_list" | "validator";
  argument: unknown;
}

export interface TermRef {
  kind: "iri" | "blank" | "literal";
  value: string;
  datatype?: string;
  language?: string;
}

export interface Condition {
  path: string;
  equals: TermRef;
}

export interface FormField {
  path: string;
  label: string;
  widget: Widget;
  required: boolean;
  min_occurs: number;
  max_occurs: number | null;
  options: FormOption[] | null;
  datatype: string | null;
  live_checks: LiveCheck[];
  async_validators: string[];
  visible_when: Condition | null;
}

export interface FormSchema {
  schema_version: string;
  shape_id: string;
  target_class: string;
  fields: FormField[];
}

export interface FormListEntry {
  shape_id: string;
  target_class: string;
  label: string;
}

export interface SubmissionPayload {
  shape_id: string;
  values: Record<string, string[]>;
}

export interface ReportResult {
  focusNode: string;
  resultPath: string | null;
  sourceConstraintComponent: string;
  value: string | null;
  resultMessage: string;
  resultSeverity: "violation" | "warning";
  phase: "shacl" | "custom";
}

export interface ValidationReportDoc {
  version: string;
  conforms: boolean;
  results: ReportResult[];
}

export interface AcceptedDoc {
  iri: string;
  turtle: string;
}
