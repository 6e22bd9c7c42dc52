"""chartnav: accessible chart navigation with a conversational query pipeline.

Compiles a declarative chart specification into a keyboard-navigable
accessibility tree, answers natural-language questions about the chart
through a classified, agent-routed pipeline with a fully deterministic
replayable LLM boundary, and ships the evaluation harness used to score
answer quality.
"""

__version__ = "0.1.0"
