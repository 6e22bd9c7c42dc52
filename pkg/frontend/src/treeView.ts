// Accessible tree widget with roving tabindex. Arrow keys and "t" are
// forwarded to the server; focus moves only after the server acknowledges,
// and node labels are announced verbatim as the server rendered them.

import type { ApiClient, KeyResult, TreeNodeInfo } from "./api.js";
import type { Announcer } from "./announcer.js";
import type { UiState } from "./state.js";

const KEY_MAP: Record<string, string> = {
  ArrowUp: "up",
  ArrowDown: "down",
  ArrowLeft: "left",
  ArrowRight: "right",
  t: "t",
  T: "t",
};

export const BOUNDARY_CUE = "Edge of tree.";

export class TreeView {
  readonly element: HTMLElement;
  private items = new Map<string, HTMLElement>();
  private modal: HTMLElement | null = null;

  constructor(
    container: HTMLElement,
    private client: ApiClient,
    private state: UiState,
    private announcer: Announcer,
  ) {
    this.element = document.createElement("ul");
    this.element.setAttribute("role", "tree");
    this.element.setAttribute("aria-label", "Chart structure");
    this.element.addEventListener("keydown", (e) => void this.onKeydown(e as KeyboardEvent));
    container.append(this.element);
  }

  async load(): Promise<void> {
    const payload = await this.client.getTree(this.state.sessionId);
    this.element.textContent = "";
    this.items.clear();
    for (const node of payload.nodes) {
      this.element.append(this.renderItem(node));
    }
    this.state.focusedAddress = payload.cursor;
    this.applyFocus(false);
  }

  private renderItem(node: TreeNodeInfo): HTMLElement {
    const item = document.createElement("li");
    item.setAttribute("role", "treeitem");
    item.setAttribute("aria-level", String(node.level));
    item.dataset.address = node.address;
    item.tabIndex = -1;
    item.textContent = node.label;
    this.items.set(node.address, item);
    return item;
  }

  get focusedAddress(): string {
    return this.state.focusedAddress;
  }

  focusCurrent(): void {
    this.applyFocus(true);
  }

  // Move focus to the address the server reported; roving tabindex keeps
  // exactly one tab stop inside the tree.
  syncToServer(cursor: string, focusedLabel: string): void {
    this.state.focusedAddress = cursor;
    this.applyFocus(true);
    this.announcer.say(focusedLabel);
  }

  private applyFocus(takeFocus: boolean): void {
    for (const [address, item] of this.items) {
      item.tabIndex = address === this.state.focusedAddress ? 0 : -1;
      item.setAttribute("aria-selected", String(address === this.state.focusedAddress));
    }
    const current = this.items.get(this.state.focusedAddress);
    if (current && takeFocus) current.focus();
  }

  private async onKeydown(event: KeyboardEvent): Promise<void> {
    const key = KEY_MAP[event.key];
    if (!key) return;
    event.preventDefault();
    try {
      await this.sendKey(key);
    } catch (error) {
      // transport failure: announce loudly, leave focus where it was
      this.announcer.alert(String(error instanceof Error ? error.message : error));
    }
  }

  async sendKey(key: string): Promise<KeyResult> {
    const result = await this.client.sendKey(this.state.sessionId, key);
    this.state.focusedAddress = result.cursor;
    this.applyFocus(true);
    if (result.boundary) {
      this.announcer.say(BOUNDARY_CUE);
    } else {
      this.announcer.say(result.focused_label);
    }
    if (result.snapshot) {
      this.openSnapshot(result.focused_label, result.snapshot);
    } else if (!result.table_open) {
      this.closeSnapshot();
    }
    return result;
  }

  private openSnapshot(label: string, snapshot: { columns: string[]; rows: string[][] }): void {
    this.closeSnapshot();
    const modal = document.createElement("div");
    modal.setAttribute("role", "dialog");
    modal.setAttribute("aria-modal", "true");
    modal.setAttribute("aria-label", label);
    modal.className = "snapshot-modal";

    const table = document.createElement("table");
    const head = document.createElement("tr");
    for (const column of snapshot.columns) {
      const th = document.createElement("th");
      th.scope = "col";
      th.textContent = column;
      head.append(th);
    }
    table.append(head);
    for (const row of snapshot.rows) {
      const tr = document.createElement("tr");
      for (const cell of row) {
        const td = document.createElement("td");
        td.textContent = cell;
        tr.append(td);
      }
      table.append(tr);
    }
    modal.append(table);
    this.element.insertAdjacentElement("afterend", modal);
    this.modal = modal;
  }

  closeSnapshot(): void {
    if (this.modal) {
      this.modal.remove();
      this.modal = null;
    }
  }

  get snapshotOpen(): boolean {
    return this.modal !== null;
  }
}
