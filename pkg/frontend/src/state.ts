// Client-side UI state. Focus always mirrors the server cursor as of the
// last acknowledged request; nothing here derives chart content.

import type { AnswerPayload } from "./api.js";

export interface UiState {
  sessionId: string;
  focusedAddress: string;
  viewMode: "tree" | "table";
  pendingQuery: boolean;
  lastAnswer: AnswerPayload | null;
  suggestions: string[]; // at most 4 cold-start or 2 alternatives
}

export function initialState(sessionId: string, cursor: string): UiState {
  return {
    sessionId,
    focusedAddress: cursor,
    viewMode: "tree",
    pendingQuery: false,
    lastAnswer: null,
    suggestions: [],
  };
}
