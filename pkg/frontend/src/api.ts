// Thin fetch wrappers over the service API.

import type {
  AcceptedDoc,
  FormListEntry,
  FormSchema,
  SubmissionPayload,
  ValidationReportDoc,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  async listForms(): Promise<FormListEntry[]> {
    const response = await this.fetchImpl(`${this.base}/api/forms`);
    if (!response.ok) throw new Error(`listing forms failed: HTTP ${response.status}`);
    return (await response.json()) as FormListEntry[];
  }

  async getForm(shapeId: string): Promise<FormSchema> {
    const response = await this.fetchImpl(
      `${this.base}/api/forms/${encodeURIComponent(shapeId)}`,
    );
    if (!response.ok) throw new Error(`fetching the form failed: HTTP ${response.status}`);
    return (await response.json()) as FormSchema;
  }

  async validate(payload: SubmissionPayload): Promise<ValidationReportDoc> {
    const response = await this.fetchImpl(`${this.base}/api/validate`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
    if (!response.ok) throw new Error(`validation failed: HTTP ${response.status}`);
    return (await response.json()) as ValidationReportDoc;
  }

  async submit(
    payload: SubmissionPayload,
  ): Promise<{ accepted: AcceptedDoc } | { rejected: ValidationReportDoc }> {
    const response = await this.fetchImpl(`${this.base}/api/submit`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
    if (response.status === 422) {
      return { rejected: (await response.json()) as ValidationReportDoc };
    }
    if (!response.ok) throw new Error(`submission failed: HTTP ${response.status}`);
    return { accepted: (await response.json()) as AcceptedDoc };
  }
}
