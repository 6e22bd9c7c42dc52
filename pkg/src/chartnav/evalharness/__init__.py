"""Benchmark corpus handling, metrics, judging, and report assembly."""

from .corpus import BenchmarkItem, convert_released_corpus, load_corpus, save_corpus
from .judge import JudgeExample, JudgeVerdict, judge, judge_prompt
from .metrics import ConfusionMatrix, classification_metrics, expand_confusion_counts
from .navgen import generate_navigation_queries
from .rankcorr import kendall_tau
from .runner import BenchmarkReport, ItemResult, run_benchmark
from .split import stratified_split

__all__ = [
    "BenchmarkItem",
    "BenchmarkReport",
    "ConfusionMatrix",
    "ItemResult",
    "JudgeExample",
    "JudgeVerdict",
    "classification_metrics",
    "convert_released_corpus",
    "expand_confusion_counts",
    "generate_navigation_queries",
    "judge",
    "judge_prompt",
    "kendall_tau",
    "load_corpus",
    "run_benchmark",
    "save_corpus",
    "stratified_split",
]
