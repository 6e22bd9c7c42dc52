// Conversational panel: text input (speech input is intentionally not
// offered), query echo + justification + answer rendering, progress
// announcements from the event stream, and suggestion buttons that submit
// on activation. One query may be in flight at a time.

import type { AnswerPayload, ApiClient } from "./api.js";
import type { Announcer } from "./announcer.js";
import type { TreeView } from "./treeView.js";
import type { UiState } from "./state.js";

export class ChatPanel {
  readonly element: HTMLElement;
  readonly input: HTMLInputElement;
  readonly submitButton: HTMLButtonElement;
  readonly suggestionBar: HTMLElement;
  readonly answerRegion: HTMLElement;

  constructor(
    container: HTMLElement,
    private client: ApiClient,
    private state: UiState,
    private announcer: Announcer,
    private treeView?: TreeView,
  ) {
    this.element = document.createElement("section");
    this.element.setAttribute("aria-label", "Ask about the chart");

    const note = document.createElement("p");
    note.className = "input-note";
    note.textContent = "Speech input is not available; type your question below.";

    const form = document.createElement("form");
    this.input = document.createElement("input");
    this.input.type = "text";
    this.input.setAttribute("aria-label", "Your question");
    this.submitButton = document.createElement("button");
    this.submitButton.type = "submit";
    this.submitButton.textContent = "Ask";
    form.append(this.input, this.submitButton);
    form.addEventListener("submit", (e) => {
      e.preventDefault();
      void this.submit(this.input.value);
    });

    this.suggestionBar = document.createElement("div");
    this.suggestionBar.setAttribute("role", "group");
    this.suggestionBar.setAttribute("aria-label", "Suggested questions");

    this.answerRegion = document.createElement("div");
    this.answerRegion.className = "answer";

    this.element.append(note, form, this.suggestionBar, this.answerRegion);
    container.append(this.element);
  }

  async loadColdStart(): Promise<void> {
    const payload = await this.client.getSuggestions(this.state.sessionId);
    this.renderSuggestions(payload.suggestions.slice(0, 4));
  }

  renderSuggestions(texts: string[]): void {
    this.state.suggestions = texts;
    this.suggestionBar.textContent = "";
    for (const text of texts) {
      const button = document.createElement("button");
      button.type = "button";
      button.className = "suggestion";
      button.textContent = text;
      button.addEventListener("click", () => void this.submit(text));
      this.suggestionBar.append(button);
    }
  }

  get suggestionButtons(): HTMLButtonElement[] {
    return Array.from(this.suggestionBar.querySelectorAll("button"));
  }

  async submit(text: string): Promise<AnswerPayload | null> {
    const trimmed = text.trim();
    if (!trimmed || this.state.pendingQuery) return null;
    this.state.pendingQuery = true;
    this.setControlsDisabled(true);
    // cold-start buttons are one-shot; alternatives replace them on failure
    this.suggestionBar.textContent = "";

    let answer: AnswerPayload | null = null;
    try {
      for await (const event of this.client.submitQuery(this.state.sessionId, trimmed)) {
        if (event.event === "progress") {
          const phase = String(event.data["phase"]);
          const message = String(event.data["message"]);
          if (phase === "error") {
            this.announcer.alert(message);
          } else if (phase !== "done") {
            this.announcer.say(message);
          }
        } else if (event.event === "answer") {
          answer = event.data as unknown as AnswerPayload;
        }
      }
    } finally {
      this.state.pendingQuery = false;
      this.setControlsDisabled(false);
    }
    if (answer) {
      this.renderAnswer(answer);
    }
    return answer;
  }

  private renderAnswer(answer: AnswerPayload): void {
    this.state.lastAnswer = answer;
    this.answerRegion.textContent = "";

    const echo = document.createElement("p");
    echo.className = "query-echo";
    echo.textContent = answer.query_echo;
    const justification = document.createElement("p");
    justification.className = "justification";
    justification.textContent = answer.justification;
    const body = document.createElement("p");
    body.className = "body";
    body.textContent = answer.body;
    this.answerRegion.append(echo, justification, body);
    this.announcer.say(answer.body);

    if (answer.instruction_script && this.treeView) {
      const go = document.createElement("button");
      go.type = "button";
      go.className = "take-me-there";
      go.textContent = "Take me there";
      const steps = answer.instruction_script.steps;
      go.addEventListener("click", () => void this.replayScript(steps));
      this.answerRegion.append(go);
    }

    if (answer.suggestions.length > 0) {
      this.renderSuggestions(answer.suggestions.slice(0, 2));
    }

    if (answer.cursor && this.treeView && answer.cursor !== this.state.focusedAddress) {
      // auto-traversal moved the server cursor; mirror it
      this.treeView.syncToServer(answer.cursor, answer.focused_label);
    }
  }

  // Traversal is the server's own instruction script replayed key by key.
  private async replayScript(steps: Array<[string, number]>): Promise<void> {
    if (!this.treeView) return;
    for (const [key, count] of steps) {
      for (let i = 0; i < count; i++) {
        await this.treeView.sendKey(key);
      }
    }
  }

  private setControlsDisabled(disabled: boolean): void {
    this.input.disabled = disabled;
    this.submitButton.disabled = disabled;
    for (const button of this.suggestionButtons) {
      button.disabled = disabled;
    }
  }
}
