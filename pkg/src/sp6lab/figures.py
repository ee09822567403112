"""Matplotlib renderings for the CLI report paths."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def _save(fig, path: str | Path) -> str:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    # fixed metadata keeps repeated renders byte-stable
    fig.savefig(path, dpi=120, metadata={"Software": None} if path.suffix == ".png" else None)
    plt.close(fig)
    return str(path)


def ktype_bars(lines: list[dict], path: str | Path) -> str:
    """One panel per (p, q): multiplicity of each highest weight."""
    fig, axes = plt.subplots(len(lines), 1, figsize=(8, 2.2 * len(lines)), squeeze=False)
    for ax, line in zip(axes[:, 0], lines):
        labels = ["(" + ",".join(str(c) for c in e["hw"]) + ")" for e in line["table"]]
        mults = [e["mult"] for e in line["table"]]
        ax.bar(range(len(mults)), mults, color="tab:blue")
        ax.set_xticks(range(len(mults)))
        ax.set_xticklabels(labels, rotation=60, fontsize=7)
        ax.set_ylabel("mult")
        ax.set_title(f"p={line['p']}, q={line['q']}  (dim {line['total_dimension']})", fontsize=9)
    fig.tight_layout()
    return _save(fig, path)


def bm_convergence(report: dict, path: str | Path) -> str:
    """Residual per refinement level and the log-log decay fit."""
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    lev = report["levels"]
    x = [row["radial_points"] for row in lev]
    ax1.semilogy(x, [row["compact_residual"] for row in lev], "o-", label="compact bump")
    ax1.semilogy(x, [row["rapid_decay_residual"] for row in lev], "s-", label="rapidly decaying")
    ax1.axhline(report["tol"], color="gray", ls="--", lw=1, label="tol")
    ax1.set_xscale("log", base=2)
    ax1.set_xlabel("radial nodes per panel")
    ax1.set_ylabel("homotopy residual")
    ax1.legend(fontsize=8)

    dec = report["decay"]
    loglog = np.log(np.abs(np.log(dec["radii"])))
    ax2.plot(loglog, np.log(dec["values"]), "o", label="|K f|")
    fit = np.log(dec["constant"]) - dec["exponent"] * loglog
    ax2.plot(loglog, fit, "-", label=f"slope -{dec['exponent']:.3f}")
    ax2.set_xlabel("log |log rho|")
    ax2.set_ylabel("log |K f|")
    ax2.set_title(f"N={dec['N']}, expected {dec['expected']}", fontsize=9)
    ax2.legend(fontsize=8)
    fig.tight_layout()
    return _save(fig, path)
