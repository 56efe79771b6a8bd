"""Binary classifier evaluation: confusion counts, metrics, ROC curves and AUC."""

from ._core import (
    ConfusionCounts,
    DegenerateInputError,
    DiagonalPosition,
    Label,
    RocCurve,
    accuracy,
    all_metrics,
    apply_threshold,
    auc_pair_count,
    auc_trapezoid,
    binarize,
    diagonal_position,
    empty,
    error_rate,
    f1_score,
    false_positive_rate,
    from_predictions,
    matthews_corrcoef,
    merge,
    precision,
    recall,
    record,
    render_svg,
    roc_points,
    run_cli,
    sensitivity,
    specificity,
    true_negative_rate,
    true_positive_rate,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
