// Form state: entry slots per field, live errors, and submit lifecycle.
// The state machine enforces what the schema allows: occurrence slots never
// exceed max_occurs, select slots only hold listed options, and hidden
// conditional fields lose their entries so they never reach the payload.

import { runLiveChecks } from "./checks.js";
import {
  SUPPORTED_SCHEMA_VERSION,
  type FormField,
  type FormSchema,
  type SubmissionPayload,
  type ValidationReportDoc,
} from "./types.js";

export type SubmitState =
  | { kind: "idle" }
  | { kind: "validating" }
  | { kind: "rejected"; report: ValidationReportDoc }
  | { kind: "accepted"; iri: string; turtle: string }
  | { kind: "failed"; message: string };

export class SchemaVersionError extends Error {}

export class FormState {
  readonly schema: FormSchema;
  private readonly slots = new Map<string, string[]>();
  readonly fieldErrors = new Map<string, string[]>();
  submitState: SubmitState = { kind: "idle" };

  constructor(schema: FormSchema) {
    if (schema.schema_version !== SUPPORTED_SCHEMA_VERSION) {
      throw new SchemaVersionError(
        `unsupported form schema version ${JSON.stringify(schema.schema_version)}`,
      );
    }
    this.schema = schema;
    for (const field of schema.fields) {
      if (this.isVisible(field)) {
        const initial = Math.max(field.min_occurs, 1);
        for (let i = 0; i < initial; i++) this.addSlot(field);
      }
    }
  }

  fieldFor(path: string): FormField | undefined {
    return this.schema.fields.find((f) => f.path === path);
  }

  values(path: string): string[] {
    return [...(this.slots.get(path) ?? [])];
  }

  isVisible(field: FormField): boolean {
    if (!field.visible_when) return true;
    const held = this.slots.get(field.visible_when.path) ?? [];
    return held.includes(field.visible_when.equals.value);
  }

  visibleFields(): FormField[] {
    return this.schema.fields.filter((f) => this.isVisible(f));
  }

  canAddSlot(field: FormField): boolean {
    const current = this.slots.get(field.path)?.length ?? 0;
    return field.max_occurs === null || current < field.max_occurs;
  }

  addSlot(field: FormField): boolean {
    if (!this.canAddSlot(field)) return false;
    const current = this.slots.get(field.path) ?? [];
    const initial = field.widget === "select" ? (field.options?.[0]?.value ?? "") : "";
    this.slots.set(field.path, [...current, initial]);
    this.syncConditionals();
    return true;
  }

  setSlot(field: FormField, index: number, value: string): boolean {
    const current = this.slots.get(field.path) ?? [];
    if (index < 0 || index >= current.length) return false;
    if (field.widget === "select" && !(field.options ?? []).some((o) => o.value === value)) {
      return false; // selects only ever hold listed options
    }
    current[index] = value;
    this.slots.set(field.path, current);
    this.syncConditionals();
    return true;
  }

  removeSlot(field: FormField, index: number): boolean {
    const current = this.slots.get(field.path) ?? [];
    if (index < 0 || index >= current.length) return false;
    current.splice(index, 1);
    this.slots.set(field.path, current);
    this.syncConditionals();
    return true;
  }

  // hidden conditional fields drop their entries and errors immediately
  private syncConditionals(): void {
    for (const field of this.schema.fields) {
      if (field.visible_when && !this.isVisible(field)) {
        this.slots.delete(field.path);
        this.fieldErrors.delete(field.path);
      }
    }
  }

  refreshLiveErrors(field: FormField): string[] {
    const errors = (this.slots.get(field.path) ?? []).flatMap((value) =>
      runLiveChecks(field, value),
    );
    if (errors.length) {
      this.fieldErrors.set(field.path, errors);
    } else {
      this.fieldErrors.delete(field.path);
    }
    return errors;
  }

  hasLiveErrors(): boolean {
    for (const errors of this.fieldErrors.values()) {
      if (errors.length) return true;
    }
    return false;
  }

  buildPayload(): SubmissionPayload {
    const values: Record<string, string[]> = {};
    for (const field of this.visibleFields()) {
      const filled = (this.slots.get(field.path) ?? []).filter((v) => v !== "");
      if (filled.length) values[field.path] = filled;
    }
    return { shape_id: this.schema.shape_id, values };
  }

  applyReport(report: ValidationReportDoc): void {
    this.submitState = { kind: "rejected", report };
    this.fieldErrors.clear();
    for (const result of report.results) {
      if (!result.resultPath) continue;
      const existing = this.fieldErrors.get(result.resultPath) ?? [];
      this.fieldErrors.set(result.resultPath, [...existing, result.resultMessage]);
    }
  }
}
