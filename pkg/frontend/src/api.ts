// Typed client for the chartnav /v1 API. All chart content (labels,
// instructions, answers) comes from the server verbatim; this module only
// moves bytes. The transport is injectable so tests can run against a stub
// server.

export interface ServerEvent {
  event: string; // "progress" | "answer"
  data: Record<string, unknown>;
}

export interface Transport {
  request(method: string, path: string, body?: unknown): Promise<Record<string, unknown>>;
  stream(path: string, body: unknown): AsyncIterable<ServerEvent>;
}

export interface SessionInfo {
  session_id: string;
  chart_id: string;
  cursor: string;
  view_mode: string;
  focused_label: string;
}

export interface TreeNodeInfo {
  address: string;
  level: number;
  kind: string;
  label: string;
  group: boolean;
}

export interface TreePayload {
  tree_text: string;
  nodes: TreeNodeInfo[];
  cursor: string;
  focused_label: string;
}

export interface KeyResult {
  cursor: string;
  focused_label: string;
  boundary: boolean;
  table_open: boolean;
  snapshot?: { columns: string[]; rows: string[][] };
}

export interface InstructionScript {
  steps: Array<[string, number]>;
  spoken: string;
}

export interface AnswerPayload {
  query_echo: string;
  justification: string;
  body: string;
  kind: string;
  suggestions: string[];
  instruction_script: InstructionScript | null;
  focused_label: string;
  cursor: string;
}

export interface SortPayload {
  columns: string[];
  rows: string[][];
  sort_state: { column: string; order: string };
}

export class ApiClient {
  constructor(private transport: Transport) {}

  private async call<T>(method: string, path: string, body?: unknown): Promise<T> {
    return (await this.transport.request(method, path, body)) as unknown as T;
  }

  createSession(chartId: string): Promise<SessionInfo> {
    return this.call("POST", "/v1/sessions", { chart_id: chartId });
  }

  getTree(sessionId: string): Promise<TreePayload> {
    return this.call("GET", `/v1/sessions/${sessionId}/tree`);
  }

  sendKey(sessionId: string, key: string): Promise<KeyResult> {
    return this.call("POST", `/v1/sessions/${sessionId}/key`, { key });
  }

  toggleView(sessionId: string): Promise<{ view_mode: string }> {
    return this.call("POST", `/v1/sessions/${sessionId}/view`);
  }

  sortTable(sessionId: string, column: string, order: string): Promise<SortPayload> {
    return this.call("POST", `/v1/sessions/${sessionId}/sort`, { column, order });
  }

  getSuggestions(sessionId: string): Promise<{ suggestions: string[] }> {
    return this.call("GET", `/v1/sessions/${sessionId}/suggestions`);
  }

  submitQuery(sessionId: string, text: string): AsyncIterable<ServerEvent> {
    return this.transport.stream(`/v1/sessions/${sessionId}/query`, { text });
  }
}

// fetch + server-sent-events transport used by the real page
export class HttpTransport implements Transport {
  constructor(private baseUrl: string = "") {}

  async request(method: string, path: string, body?: unknown): Promise<Record<string, unknown>> {
    const response = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? undefined : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = (await response.json()) as Record<string, unknown>;
    if (!response.ok) {
      throw new Error(String(payload["error"] ?? response.status));
    }
    return payload;
  }

  async *stream(path: string, body: unknown): AsyncIterable<ServerEvent> {
    const response = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json", Accept: "text/event-stream" },
      body: JSON.stringify(body),
    });
    if (!response.body) {
      throw new Error("streaming not supported by this browser");
    }
    const reader = response.body.getReader();
    const decoder = new TextDecoder();
    let buffer = "";
    for (;;) {
      const { value, done } = await reader.read();
      if (done) break;
      buffer += decoder.decode(value, { stream: true });
      let index: number;
      while ((index = buffer.indexOf("\n\n")) >= 0) {
        const block = buffer.slice(0, index);
        buffer = buffer.slice(index + 2);
        const event = parseSseBlock(block);
        if (event) yield event;
      }
    }
  }
}

export function parseSseBlock(block: string): ServerEvent | null {
  let eventName = "message";
  let data = "";
  for (const line of block.split("\n")) {
    if (line.startsWith("event: ")) eventName = line.slice(7).trim();
    else if (line.startsWith("data: ")) data += line.slice(6);
  }
  if (!data) return null;
  return { event: eventName, data: JSON.parse(data) as Record<string, unknown> };
}
