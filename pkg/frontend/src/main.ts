// Entry point: list the available forms, pick one, render it.

import { ApiClient } from "./api.js";
import { renderForm } from "./render.js";
import { SchemaVersionError } from "./state.js";

async function bootstrap(): Promise<void> {
  const app = document.getElementById("app");
  if (!app) return;
  const api = new ApiClient("");
  try {
    const entries = await api.listForms();
    if (!entries.length) {
      app.textContent = "No forms are configured.";
      return;
    }
    const requested = new URLSearchParams(window.location.search).get("shape");
    const entry = entries.find((e) => e.shape_id === requested) ?? entries[0]!;
    const heading = document.createElement("h1");
    heading.textContent = `New ${entry.label}`;
    app.appendChild(heading);
    const schema = await api.getForm(entry.shape_id);
    renderForm(app, schema, {});
  } catch (error) {
    app.textContent =
      error instanceof SchemaVersionError
        ? `This interface cannot render the form: ${error.message}`
        : `Could not load the form service: ${String(error)}`;
  }
}

void bootstrap();
