/** Application wiring: form, search flow, detail view, stats. */

import { ApiClient, ApiError } from "./api.js";
import {
  FORM_FIELDS,
  FormField,
  QueryFormState,
  RequestSequencer,
  canSubmit,
  paramsToState,
  stateToParams,
  toRequestBody,
} from "./state.js";
import {
  clearError,
  renderError,
  renderPackage,
  renderResults,
  renderStats,
} from "./render.js";

const TOP_K = 20;

export interface AppElements {
  form: HTMLFormElement;
  submit: HTMLButtonElement;
  results: HTMLElement;
  detail: HTMLElement;
  stats: HTMLElement;
  error: HTMLElement;
}

export function readForm(form: HTMLFormElement): QueryFormState {
  const state = {} as QueryFormState;
  for (const field of FORM_FIELDS) {
    const input = form.elements.namedItem(field) as HTMLInputElement | null;
    state[field] = input ? input.value : "";
  }
  return state;
}

export function writeForm(form: HTMLFormElement, state: QueryFormState): void {
  for (const field of FORM_FIELDS) {
    const input = form.elements.namedItem(field) as HTMLInputElement | null;
    if (input) {
      input.value = state[field];
    }
  }
}

export function initApp(elements: AppElements, client: ApiClient): {
  runSearch: () => Promise<void>;
} {
  const sequencer = new RequestSequencer();

  const syncSubmit = (): void => {
    elements.submit.disabled = !canSubmit(readForm(elements.form));
  };

  const runSearch = async (): Promise<void> => {
    const state = readForm(elements.form);
    if (!canSubmit(state)) {
      return;
    }
    const token = sequencer.next();
    history.replaceState(null, "", `?${stateToParams(state)}`);
    try {
      const response = await client.search(toRequestBody(state, TOP_K));
      if (!sequencer.isCurrent(token)) {
        return; // superseded by a newer submission
      }
      clearError(elements.error);
      renderResults(elements.results, response.results, callbacks);
    } catch (error) {
      if (!sequencer.isCurrent(token)) {
        return;
      }
      if (error instanceof ApiError) {
        renderError(elements.error, `Search failed: ${error.message}`);
      } else {
        renderError(elements.error, "Network error.", () => void runSearch());
      }
    }
  };

  const showPackage = async (name: string): Promise<void> => {
    try {
      const features = await client.getPackage(name);
      clearError(elements.error);
      renderPackage(elements.detail, features, callbacks);
    } catch (error) {
      const message =
        error instanceof ApiError ? error.message : "Network error.";
      renderError(elements.error, `Cannot load ${name}: ${message}`);
    }
  };

  const callbacks = {
    onSelectPackage: (name: string): void => {
      void showPackage(name);
    },
    onPickFeature: (field: FormField, value: string): void => {
      const input = elements.form.elements.namedItem(
        field,
      ) as HTMLInputElement | null;
      if (input) {
        input.value = value;
        syncSubmit();
      }
    },
  };

  elements.form.addEventListener("input", syncSubmit);
  elements.form.addEventListener("submit", (event) => {
    event.preventDefault();
    void runSearch();
  });

  writeForm(elements.form, paramsToState(new URLSearchParams(location.search)));
  syncSubmit();
  if (canSubmit(readForm(elements.form))) {
    void runSearch();
  }
  void client
    .getStats()
    .then((stats) => renderStats(elements.stats, stats))
    .catch(() => renderError(elements.stats, "Stats unavailable."));

  return { runSearch };
}

export function bootstrap(): void {
  const elements: AppElements = {
    form: document.querySelector("#query-form") as HTMLFormElement,
    submit: document.querySelector("#submit") as HTMLButtonElement,
    results: document.querySelector("#results") as HTMLElement,
    detail: document.querySelector("#detail") as HTMLElement,
    stats: document.querySelector("#stats") as HTMLElement,
    error: document.querySelector("#error") as HTMLElement,
  };
  initApp(elements, new ApiClient(""));
}

if (typeof document !== "undefined" && document.querySelector("#query-form")) {
  bootstrap();
}
