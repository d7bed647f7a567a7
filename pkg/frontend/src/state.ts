/** Query-form state: validation, request bodies, and URL round-tripping. */

export const FORM_FIELDS = [
  "robot",
  "sensor",
  "category",
  "function",
  "characteristics",
  "action",
  "node",
  "service",
  "message",
  "launch",
] as const;

export type FormField = (typeof FORM_FIELDS)[number];

export type QueryFormState = Record<FormField, string>;

export function emptyForm(): QueryFormState {
  const state = {} as QueryFormState;
  for (const field of FORM_FIELDS) {
    state[field] = "";
  }
  return state;
}

/** At least one field must carry a non-blank value before submitting. */
export function canSubmit(state: QueryFormState): boolean {
  return FORM_FIELDS.some((field) => state[field].trim() !== "");
}

/** Request body for POST /api/search; blanks dropped, characteristics split. */
export function toRequestBody(
  state: QueryFormState,
  topK: number,
): Record<string, unknown> {
  const body: Record<string, unknown> = { top_k: topK };
  for (const field of FORM_FIELDS) {
    const value = state[field].trim();
    if (value === "") {
      continue;
    }
    if (field === "characteristics") {
      const parts = value
        .split(",")
        .map((part) => part.trim())
        .filter((part) => part !== "");
      if (parts.length > 0) {
        body[field] = parts;
      }
    } else {
      body[field] = value;
    }
  }
  return body;
}

/** Shareable URL query string; empty fields are omitted. */
export function stateToParams(state: QueryFormState): URLSearchParams {
  const params = new URLSearchParams();
  for (const field of FORM_FIELDS) {
    const value = state[field].trim();
    if (value !== "") {
      params.set(field, value);
    }
  }
  return params;
}

export function paramsToState(params: URLSearchParams): QueryFormState {
  const state = emptyForm();
  for (const field of FORM_FIELDS) {
    const value = params.get(field);
    if (value !== null) {
      state[field] = value;
    }
  }
  return state;
}

/**
 * Monotonic sequence numbers for in-flight searches: a response is applied
 * only if no newer submission has been issued since it started.
 */
export class RequestSequencer {
  private current = 0;

  next(): number {
    this.current += 1;
    return this.current;
  }

  isCurrent(token: number): boolean {
    return token === this.current;
  }
}
