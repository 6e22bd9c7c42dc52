"""Model and web providers behind the gateway.

HTTPProvider talks to an OpenAI-style chat-completion endpoint; the API key
comes from an environment variable and the model name from configuration.
ScriptedProvider serves canned responses for demos and for recording the
replay transcripts shipped with the package.
"""

from __future__ import annotations

import os
import re
import time
from typing import Callable, Optional

from ..errors import GatewayTimeout, TransportError


class HTTPProvider:
    def __init__(
        self,
        base_url: str,
        model: str,
        api_key_env: str = "CHARTNAV_API_KEY",
        web_url: Optional[str] = None,
    ):
        self.base_url = base_url.rstrip("/")
        self.model = model
        self.api_key_env = api_key_env
        self.web_url = web_url

    def _headers(self) -> dict:
        key = os.environ.get(self.api_key_env, "")
        headers = {"Content-Type": "application/json"}
        if key:
            headers["Authorization"] = f"Bearer {key}"
        return headers

    def complete(self, rendered_prompt: str, timeout: float) -> str:
        import httpx

        payload = {
            "model": self.model,
            "messages": [{"role": "user", "content": rendered_prompt}],
        }
        try:
            response = httpx.post(
                f"{self.base_url}/chat/completions",
                json=payload,
                headers=self._headers(),
                timeout=timeout,
            )
            response.raise_for_status()
        except httpx.TimeoutException as exc:
            raise GatewayTimeout(f"completion call exceeded {timeout}s") from exc
        except httpx.HTTPError as exc:
            raise TransportError(str(exc)) from exc
        body = response.json()
        try:
            return body["choices"][0]["message"]["content"]
        except (KeyError, IndexError, TypeError) as exc:
            raise TransportError(f"unexpected completion payload: {body!r}") from exc

    def web_search(self, query: str, timeout: float) -> str:
        import httpx

        if not self.web_url:
            raise TransportError("no web search endpoint configured")
        try:
            response = httpx.get(
                self.web_url, params={"q": query}, headers=self._headers(), timeout=timeout
            )
            response.raise_for_status()
        except httpx.TimeoutException as exc:
            raise GatewayTimeout(f"web lookup exceeded {timeout}s") from exc
        except httpx.HTTPError as exc:
            raise TransportError(str(exc)) from exc
        return response.text


class ScriptedProvider:
    """Pattern-matched canned responses, tried in declaration order.

    Rules are (pattern, response) pairs; the pattern is a regex searched in
    the rendered prompt (completions) or the query (web lookups). A response
    may be a string, a callable of the regex match, or the TIMEOUT marker.
    """

    TIMEOUT = object()

    def __init__(self, rules=None, web_rules=None, delay: float = 0.0):
        self.rules = list(rules or [])
        self.web_rules = list(web_rules or [])
        self.delay = delay
        self.calls: list = []

    def add(self, pattern: str, response) -> "ScriptedProvider":
        self.rules.append((pattern, response))
        return self

    def add_web(self, pattern: str, response) -> "ScriptedProvider":
        self.web_rules.append((pattern, response))
        return self

    def complete(self, rendered_prompt: str, timeout: float) -> str:
        self.calls.append(("complete", rendered_prompt))
        return self._match(self.rules, rendered_prompt, timeout)

    def web_search(self, query: str, timeout: float) -> str:
        self.calls.append(("web", query))
        return self._match(self.web_rules, query, timeout)

    def _match(self, rules, text: str, timeout: float) -> str:
        if self.delay:
            time.sleep(self.delay)
        for pattern, response in rules:
            m = re.search(pattern, text, re.DOTALL)
            if m:
                if response is self.TIMEOUT:
                    raise GatewayTimeout(f"scripted timeout for {pattern!r}")
                if callable(response):
                    return response(m)
                return response
        raise TransportError(f"no scripted rule matches: {text[:200]!r}")


class FailingProvider:
    """Always errors; exercises degradation paths."""

    def __init__(self, exc: Optional[Exception] = None):
        self.exc = exc or TransportError("provider unavailable")

    def complete(self, rendered_prompt: str, timeout: float) -> str:
        raise self.exc

    def web_search(self, query: str, timeout: float) -> str:
        raise self.exc
