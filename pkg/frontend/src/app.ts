// Page assembly: session creation, tree/table toggle, chat panel.

import { ApiClient, HttpTransport, Transport } from "./api.js";
import { Announcer } from "./announcer.js";
import { ChatPanel } from "./chatPanel.js";
import { initialState, UiState } from "./state.js";
import { TableView } from "./tableView.js";
import { TreeView } from "./treeView.js";

export interface App {
  state: UiState;
  treeView: TreeView;
  tableView: TableView;
  chatPanel: ChatPanel;
  announcer: Announcer;
  toggleButton: HTMLButtonElement;
}

export async function mountApp(
  container: HTMLElement,
  chartId: string,
  transport: Transport = new HttpTransport(),
): Promise<App> {
  const client = new ApiClient(transport);
  const session = await client.createSession(chartId);
  const state = initialState(session.session_id, session.cursor);

  const announcer = new Announcer(container);

  const toggleButton = document.createElement("button");
  toggleButton.type = "button";
  toggleButton.textContent = "Switch to data table";
  container.append(toggleButton);

  const treeView = new TreeView(container, client, state, announcer);
  const tableView = new TableView(container, client, state);
  const chatPanel = new ChatPanel(container, client, state, announcer, treeView);

  await treeView.load();
  await chatPanel.loadColdStart();

  toggleButton.addEventListener("click", () => {
    void (async () => {
      const payload = await client.toggleView(state.sessionId);
      state.viewMode = payload.view_mode as "tree" | "table";
      const showTable = state.viewMode === "table";
      treeView.element.hidden = showTable;
      tableView.element.hidden = !showTable;
      toggleButton.textContent = showTable ? "Switch to tree view" : "Switch to data table";
    })();
  });

  return { state, treeView, tableView, chatPanel, announcer, toggleButton };
}
