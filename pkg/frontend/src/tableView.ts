// Raw data table with per-column sorting. Sorting round-trips through the
// server; rows render in exactly the order the server returned them.

import type { ApiClient, SortPayload } from "./api.js";
import type { UiState } from "./state.js";

export class TableView {
  readonly element: HTMLElement;
  private table: HTMLTableElement;
  private sortState: { column: string; order: string } | null = null;

  constructor(container: HTMLElement, private client: ApiClient, private state: UiState) {
    this.element = document.createElement("section");
    this.element.setAttribute("aria-label", "Raw data table");
    this.element.hidden = true;
    this.table = document.createElement("table");
    this.element.append(this.table);
    container.append(this.element);
  }

  async load(columns: string[], rows: string[][]): Promise<void> {
    this.render({ columns, rows, sort_state: this.sortState ?? { column: "", order: "" } });
  }

  async sortBy(column: string): Promise<void> {
    const order =
      this.sortState && this.sortState.column === column && this.sortState.order === "asc"
        ? "desc"
        : "asc";
    const payload = await this.client.sortTable(this.state.sessionId, column, order);
    this.sortState = payload.sort_state;
    this.render(payload);
  }

  private render(payload: SortPayload): void {
    this.table.textContent = "";
    const head = document.createElement("tr");
    for (const column of payload.columns) {
      const th = document.createElement("th");
      th.scope = "col";
      if (this.sortState && this.sortState.column === column) {
        th.setAttribute("aria-sort", this.sortState.order === "asc" ? "ascending" : "descending");
      }
      const button = document.createElement("button");
      button.type = "button";
      button.textContent = column;
      button.addEventListener("click", () => void this.sortBy(column));
      th.append(button);
      head.append(th);
    }
    this.table.append(head);
    for (const row of payload.rows) {
      const tr = document.createElement("tr");
      for (const cell of row) {
        const td = document.createElement("td");
        td.textContent = cell;
        tr.append(td);
      }
      this.table.append(tr);
    }
  }

  get rowsAsRendered(): string[][] {
    return Array.from(this.table.querySelectorAll("tr"))
      .slice(1)
      .map((tr) => Array.from(tr.querySelectorAll("td")).map((td) => td.textContent ?? ""));
  }
}
