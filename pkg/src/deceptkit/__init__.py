"""Domain-independent deception detection toolkit.

Harmonizes ten public spam / fake-news / rumour datasets into one binary
corpus, trains three interchangeable text classifiers plus a soft-voting
ensemble, runs the holistic benchmark and new-event learning-curve
protocols, and ships the metric, bias-audit, embedding, and attention
analyses over the results.
"""

__version__ = "0.1.0"
