import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { mountApp, type App } from "../src/app.js";
import { BOUNDARY_CUE } from "../src/treeView.js";
import { StubServer } from "./stub.js";

const TERMINATION =
  "I'm sorry, but the process has been terminated because it took too long to arrive at an answer.";

function keydown(target: HTMLElement, key: string): void {
  target.dispatchEvent(new KeyboardEvent("keydown", { key, bubbles: true }));
}

async function flush(): Promise<void> {
  await vi.advanceTimersByTimeAsync(0);
}

describe("webui against a stub server", () => {
  let stub: StubServer;
  let app: App;

  beforeEach(async () => {
    vi.useFakeTimers();
    document.body.innerHTML = "";
    stub = new StubServer();
    app = await mountApp(document.body, "bar", stub);
  });

  afterEach(() => {
    vi.useRealTimers();
  });

  it("scripted keyboard session ends focused where the server reports", async () => {
    const tree = app.treeView.element;
    keydown(tree, "ArrowDown");
    await flush();
    keydown(tree, "ArrowRight");
    await flush();
    keydown(tree, "t");
    await flush();

    expect(app.state.focusedAddress).toBe(stub.cursor);
    expect(app.state.focusedAddress).toBe("1.2");
    // "t" on a channel node is a boundary, announced as such
    expect(app.announcer.log.at(-1)?.text).toBe(BOUNDARY_CUE);
    // the tab stop mirrors the cursor (roving tabindex)
    const focused = tree.querySelector('[tabindex="0"]') as HTMLElement;
    expect(focused.dataset.address).toBe(stub.cursor);
  });

  it("focus only moves after server acknowledgment and labels are verbatim", async () => {
    keydown(app.treeView.element, "ArrowDown");
    // before the microtask runs, focus is unchanged
    expect(app.state.focusedAddress).toBe("1");
    await flush();
    expect(app.state.focusedAddress).toBe("1.1");
    expect(app.announcer.log.at(-1)?.text).toBe("X-axis titled Year.");
  });

  it("t on a group node opens a modal snapshot table", async () => {
    const tree = app.treeView.element;
    keydown(tree, "ArrowDown");
    await flush();
    keydown(tree, "ArrowDown");
    await flush();
    expect(app.state.focusedAddress).toBe("1.1.1");
    keydown(tree, "t");
    await flush();

    expect(app.treeView.snapshotOpen).toBe(true);
    const modal = document.querySelector('[role="dialog"]') as HTMLElement;
    expect(modal.getAttribute("aria-modal")).toBe("true");
    const headers = Array.from(modal.querySelectorAll("th")).map((th) => th.textContent);
    expect(headers).toEqual(["Year", "Value"]);

    keydown(tree, "t");
    await flush();
    expect(app.treeView.snapshotOpen).toBe(false);
  });

  it("cold start renders exactly 4 suggestion buttons", () => {
    const buttons = app.chatPanel.suggestionButtons;
    expect(buttons).toHaveLength(4);
    expect(buttons.map((b) => b.textContent)).toEqual(stub.suggestions);
  });

  it("a failed query renders exactly 2 alternative buttons", async () => {
    stub.answers.set("Where are these houses sold?", {
      workMs: 0,
      payload: {
        query_echo: "Where are these houses sold?",
        justification: "Your question 'Where are these houses sold?' was categorized as being analytical, and as such, has been answered based on the chart's underlying data.",
        body: "The data does not contain any information about the location of the houses.",
        kind: "analytical",
        suggestions: [
          "What information regarding the sale of these homes is provided in the dataset beyond the date and inventory quantities?",
          "Could you elaborate on any additional details related to the properties or their characteristics available within the dataset?",
        ],
        instruction_script: null,
      },
    });

    const done = app.chatPanel.submit("Where are these houses sold?");
    await vi.advanceTimersByTimeAsync(10);
    await done;

    const buttons = app.chatPanel.suggestionButtons;
    expect(buttons).toHaveLength(2);
    expect(buttons[0].textContent).toContain("What information regarding the sale");
  });

  it("announces Loading immediately and Still Loading on the 3-second cadence", async () => {
    stub.answers.set("slow question", {
      workMs: 7000,
      payload: {
        query_echo: "slow question",
        justification: "j",
        body: TERMINATION,
        kind: "analytical",
        suggestions: [],
        instruction_script: null,
      },
    });

    const done = app.chatPanel.submit("slow question");
    await flush();
    const said = () => app.announcer.log.map((e) => e.text);
    expect(said()).toContain("Loading. Please Wait");
    expect(said().filter((t) => t === "Still Loading")).toHaveLength(0);

    await vi.advanceTimersByTimeAsync(3000);
    expect(said().filter((t) => t === "Still Loading")).toHaveLength(1);

    await vi.advanceTimersByTimeAsync(3000);
    expect(said().filter((t) => t === "Still Loading")).toHaveLength(2);

    await vi.advanceTimersByTimeAsync(1000);
    await done;
    expect(document.querySelector(".answer .body")?.textContent).toBe(TERMINATION);
  });

  it("disables input and buttons while a query is pending", async () => {
    stub.answers.set("pending probe", {
      workMs: 2000,
      payload: {
        query_echo: "pending probe",
        justification: "j",
        body: "fine",
        kind: "analytical",
        suggestions: [],
        instruction_script: null,
      },
    });
    const done = app.chatPanel.submit("pending probe");
    await flush();
    expect(app.state.pendingQuery).toBe(true);
    expect(app.chatPanel.input.disabled).toBe(true);
    expect(app.chatPanel.submitButton.disabled).toBe(true);
    // second submission is a no-op while pending
    const second = await app.chatPanel.submit("pending probe");
    expect(second).toBeNull();

    await vi.advanceTimersByTimeAsync(2000);
    await done;
    expect(app.state.pendingQuery).toBe(false);
    expect(app.chatPanel.input.disabled).toBe(false);
  });

  it("renders echo, justification, and body verbatim from the server", async () => {
    const body = "The vaccination rate for South Africa is 36%";
    const justification =
      "Your question 'What is the vaccination rate of South Africa' was categorized as being analytical, and as such, has been answered based on the chart's underlying data.";
    stub.answers.set("What is the vaccination rate of South Africa", {
      workMs: 0,
      payload: {
        query_echo: "What is the vaccination rate of South Africa",
        justification,
        body,
        kind: "analytical",
        suggestions: [],
        instruction_script: null,
      },
    });
    const done = app.chatPanel.submit("What is the vaccination rate of South Africa");
    await vi.advanceTimersByTimeAsync(10);
    await done;

    expect(document.querySelector(".answer .query-echo")?.textContent).toBe(
      "What is the vaccination rate of South Africa",
    );
    expect(document.querySelector(".answer .justification")?.textContent).toBe(justification);
    expect(document.querySelector(".answer .body")?.textContent).toBe(body);
  });

  it("navigation answers offer a take-me-there button that replays the script", async () => {
    stub.answers.set("Take me to 2021", {
      workMs: 0,
      payload: {
        query_echo: "Take me to 2021",
        justification: "j",
        body: "Press the down arrow key 2 times. Press the right arrow key.",
        kind: "navigation",
        suggestions: [],
        instruction_script: {
          steps: [
            ["down", 2],
            ["right", 1],
          ],
          spoken: "Press the down arrow key 2 times. Press the right arrow key.",
        },
      },
    });
    const done = app.chatPanel.submit("Take me to 2021");
    await vi.advanceTimersByTimeAsync(10);
    await done;

    const button = document.querySelector(".take-me-there") as HTMLButtonElement;
    expect(button).toBeTruthy();
    button.click();
    await flush();
    expect(stub.cursor).toBe("1.1.2");
    expect(app.state.focusedAddress).toBe("1.1.2");
  });

  it("view toggle preserves the session and the table renders server order", async () => {
    const sessionsBefore = stub.sessionCount;
    app.toggleButton.click();
    await flush();
    expect(stub.sessionCount).toBe(sessionsBefore); // same session, no re-create
    expect(app.state.viewMode).toBe("table");
    expect(app.treeView.element.hidden).toBe(true);
    expect(app.tableView.element.hidden).toBe(false);

    await app.tableView.sortBy("Value");
    await app.tableView.sortBy("Value"); // toggles to desc on the server
    expect(app.tableView.rowsAsRendered).toEqual([
      ["2021", "9"],
      ["2020", "4"],
    ]);
  });

  it("navigation queries in table mode surface the disabled notice", async () => {
    app.toggleButton.click();
    await flush();
    const done = app.chatPanel.submit("Take me to 2021");
    await vi.advanceTimersByTimeAsync(10);
    const answer = await done;
    expect(answer?.body).toBe(stub.navDisabledBody);
    expect(document.querySelector(".answer .body")?.textContent).toContain(
      "disabled in the data table",
    );
  });

  it("announces transport errors assertively and keeps focus", async () => {
    const before = app.state.focusedAddress;
    stub.request = async () => {
      throw new Error("network unreachable");
    };
    keydown(app.treeView.element, "ArrowDown");
    await flush();
    expect(app.state.focusedAddress).toBe(before);
    const last = app.announcer.log.at(-1);
    expect(last?.level).toBe("assertive");
    expect(last?.text).toContain("network unreachable");
  });

  it("all interactive elements are keyboard reachable", () => {
    const interactive = Array.from(
      document.querySelectorAll("button, input, [role='treeitem'][tabindex='0']"),
    );
    expect(interactive.length).toBeGreaterThan(0);
    for (const el of interactive) {
      expect((el as HTMLElement).tabIndex).toBeGreaterThanOrEqual(0);
    }
  });
});
