"""Simulate one mild and one severe fault and plot the mean bus voltage.

    python3 demos/voltage_traces.py [out.svg]
"""

import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from stvsa import dynsim


def scenario(severity: float, clearing: float) -> dynsim.Scenario:
    spec = dynsim.ScenarioSpec(
        load_levels=(1.1,), motor_ratios=(0.8,), fault_severities=(severity,), clearing_times_s=(clearing,)
    )
    return dynsim.build_scenario_grid(spec)[0]


def main(out: str = "voltage_traces.svg") -> None:
    fig, ax = plt.subplots(figsize=(7, 4))
    for sev, tc in [(0.4, 0.15), (0.95, 0.23)]:
        tr = dynsim.simulate(scenario(sev, tc), dynsim.MotorModelParams())
        outcome = "motor stalls" if tr.stalled else "recovers"
        ax.plot(tr.t, tr.data[:, :, 0].mean(axis=1), label=f"severity {sev}, cleared {tc} s: {outcome}")
        print(f"severity {sev:4}  clearing {tc} s  final slip {tr.final_slip:.3f}  {outcome}")
    ax.set_xlabel("time [s]")
    ax.set_ylabel("mean bus voltage [pu]")
    ax.legend()
    fig.tight_layout()
    fig.savefig(out)
    print(f"wrote {out}")


if __name__ == "__main__":
    main(*sys.argv[1:])
