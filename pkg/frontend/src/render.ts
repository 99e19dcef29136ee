// DOM renderer driven entirely by the form schema: no shape-specific code.

import { ApiClient } from "./api.js";
import { FormState } from "./state.js";
import type { FormField, FormSchema } from "./types.js";

export interface RenderOptions {
  apiBase?: string;
  fetchImpl?: ConstructorParameters<typeof ApiClient>[1];
  debounceMs?: number;
}

export class FormController {
  readonly state: FormState;
  readonly element: HTMLFormElement;
  private readonly api: ApiClient;
  private readonly debounceMs: number;
  private readonly timers = new Map<string, ReturnType<typeof setTimeout>>();
  private inFlight = false;

  constructor(container: HTMLElement, schema: FormSchema, options: RenderOptions = {}) {
    this.state = new FormState(schema);
    this.api = new ApiClient(options.apiBase ?? "", options.fetchImpl);
    this.debounceMs = options.debounceMs ?? 300;
    this.element = container.ownerDocument.createElement("form");
    this.element.className = "shaclform";
    this.element.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.submit();
    });
    container.appendChild(this.element);
    this.render();
  }

  private doc(): Document {
    return this.element.ownerDocument;
  }

  render(): void {
    this.element.textContent = "";
    for (const field of this.state.schema.fields) {
      this.element.appendChild(this.renderField(field));
    }
    const submit = this.doc().createElement("button");
    submit.type = "submit";
    submit.className = "submit";
    submit.textContent = "Submit";
    this.element.appendChild(submit);
    this.element.appendChild(this.renderOutcome());
  }

  private renderField(field: FormField): HTMLElement {
    const wrapper = this.doc().createElement("div");
    wrapper.className = "field";
    wrapper.dataset.path = field.path;
    const visible = this.state.isVisible(field);
    if (!visible) {
      wrapper.hidden = true;
      return wrapper;
    }

    const label = this.doc().createElement("label");
    label.textContent = field.required ? `${field.label} *` : field.label;
    if (field.required) label.dataset.required = "true";
    wrapper.appendChild(label);

    const values = this.state.values(field.path);
    values.forEach((value, index) => {
      wrapper.appendChild(this.renderSlot(field, index, value));
    });

    if (this.state.canAddSlot(field)) {
      const add = this.doc().createElement("button");
      add.type = "button";
      add.className = "add-another";
      add.textContent = "Add another";
      add.addEventListener("click", () => {
        this.state.addSlot(field);
        this.render();
      });
      wrapper.appendChild(add);
    }

    const errors = this.doc().createElement("ul");
    errors.className = "errors";
    for (const message of this.state.fieldErrors.get(field.path) ?? []) {
      const item = this.doc().createElement("li");
      item.textContent = message;
      errors.appendChild(item);
    }
    wrapper.appendChild(errors);
    return wrapper;
  }

  private renderSlot(field: FormField, index: number, value: string): HTMLElement {
    const row = this.doc().createElement("div");
    row.className = "occurrence";

    let widget: HTMLSelectElement | HTMLInputElement;
    if (field.widget === "select") {
      widget = this.doc().createElement("select");
      for (const option of field.options ?? []) {
        const el = this.doc().createElement("option");
        el.value = option.value;
        el.textContent = option.label;
        if (option.value === value) el.selected = true;
        widget.appendChild(el);
      }
      widget.addEventListener("change", () => {
        this.state.setSlot(field, index, widget.value);
        this.state.refreshLiveErrors(field);
        this.render(); // visibility may have changed
      });
    } else {
      widget = this.doc().createElement("input");
      widget.type = field.widget === "url" ? "url" : "text";
      widget.value = value;
      widget.addEventListener("input", () => {
        this.state.setSlot(field, index, widget.value);
        this.scheduleLiveChecks(field);
      });
    }
    widget.dataset.path = field.path;
    widget.dataset.index = String(index);
    row.appendChild(widget);

    if (this.state.values(field.path).length > Math.max(field.min_occurs, 1)) {
      const remove = this.doc().createElement("button");
      remove.type = "button";
      remove.className = "remove";
      remove.textContent = "Remove";
      remove.addEventListener("click", () => {
        this.state.removeSlot(field, index);
        this.render();
      });
      row.appendChild(remove);
    }
    return row;
  }

  private renderOutcome(): HTMLElement {
    const outcome = this.doc().createElement("div");
    outcome.className = "outcome";
    const state = this.state.submitState;
    if (state.kind === "accepted") {
      outcome.classList.add("accepted");
      const heading = this.doc().createElement("p");
      heading.className = "minted-iri";
      heading.textContent = `Created ${state.iri}`;
      const turtle = this.doc().createElement("pre");
      turtle.className = "turtle";
      turtle.textContent = state.turtle;
      outcome.append(heading, turtle);
    } else if (state.kind === "rejected") {
      outcome.classList.add("rejected");
      const summary = this.doc().createElement("p");
      summary.className = "report-summary";
      const violations = state.report.results.filter((r) => r.resultSeverity === "violation");
      summary.textContent = `Submission rejected: ${violations.length} violation(s)`;
      outcome.appendChild(summary);
    } else if (state.kind === "failed") {
      outcome.classList.add("failed");
      const banner = this.doc().createElement("p");
      banner.className = "retry-banner";
      banner.textContent = `Could not submit (${state.message}); your entries are preserved.`;
      outcome.appendChild(banner);
    }
    return outcome;
  }

  private scheduleLiveChecks(field: FormField): void {
    const pending = this.timers.get(field.path);
    if (pending !== undefined) clearTimeout(pending);
    const run = () => {
      this.timers.delete(field.path);
      this.state.refreshLiveErrors(field);
      this.refreshErrorList(field);
    };
    if (this.debounceMs <= 0) {
      run();
      return;
    }
    this.timers.set(field.path, setTimeout(run, this.debounceMs));
  }

  private refreshErrorList(field: FormField): void {
    const wrapper = this.element.querySelector<HTMLElement>(
      `.field[data-path="${field.path.replace(/"/g, '\\"')}"]`,
    );
    const list = wrapper?.querySelector("ul.errors");
    if (!list) return;
    list.textContent = "";
    for (const message of this.state.fieldErrors.get(field.path) ?? []) {
      const item = this.doc().createElement("li");
      item.textContent = message;
      list.appendChild(item);
    }
  }

  async submit(): Promise<void> {
    if (this.inFlight) return; // at most one in-flight submission
    for (const field of this.state.visibleFields()) {
      this.state.refreshLiveErrors(field);
    }
    if (this.state.hasLiveErrors()) {
      this.render();
      return;
    }
    this.inFlight = true;
    this.state.submitState = { kind: "validating" };
    try {
      const outcome = await this.api.submit(this.state.buildPayload());
      if ("accepted" in outcome) {
        this.state.submitState = {
          kind: "accepted",
          iri: outcome.accepted.iri,
          turtle: outcome.accepted.turtle,
        };
      } else {
        this.state.applyReport(outcome.rejected);
      }
    } catch (error) {
      this.state.submitState = { kind: "failed", message: String(error) };
    } finally {
      this.inFlight = false;
    }
    this.render();
  }
}

export function renderForm(
  container: HTMLElement,
  schema: FormSchema,
  options: RenderOptions = {},
): FormController {
  return new FormController(container, schema, options);
}
