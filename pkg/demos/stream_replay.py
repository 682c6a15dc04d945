"""Replay simulated PMU frames through the TCP assessor.

Runs the tiny pipeline with a longer training budget (under a minute),
starts the listener on a free port, streams a few trajectories and prints
the verdicts next to the simulated outcome.

    python3 demos/stream_replay.py [run_dir]
"""

import json
import socket
import sys

from stvsa import pipeline as P
from stvsa import stream as S
from stvsa.transfer import Bundle


def replay(port: int, lines: list[str]) -> list[dict]:
    with socket.create_connection(("127.0.0.1", port)) as s:
        s.sendall(("\n".join(lines) + "\n").encode())
        s.shutdown(socket.SHUT_WR)
        data = b""
        while chunk := s.recv(65536):
            data += chunk
    return [json.loads(x) for x in data.decode().splitlines()]


def main(run_dir: str = "runs/tiny") -> None:
    raw = P.tiny_config(run_dir)
    raw["model"] = {"epochs": 150, "lr": 1e-3}
    cfg = P.config_from_dict(raw)
    P.run_pipeline(cfg, print)
    bundle = Bundle.load(cfg.out_dir / "models" / f"{cfg.source}.bin")
    srv = S.serve_tcp(bundle, 0, cfg.otw_s, background=True)
    port = srv.server_address[1]
    print(f"listening on 127.0.0.1:{port}")
    try:
        trajs = P.domain_trajectories(cfg, cfg.source)
        picks = [t for t in trajs if not t.stalled][:3] + [t for t in trajs if t.stalled][:3]
        for tr in picks:
            lines = [json.dumps(f.to_json()) for f in tr.frames()]
            for ev in replay(port, lines):
                truth = "unstable" if tr.stalled else "stable"
                print(f"{tr.scenario.id}: decided {ev['label']:8} p={ev['probability']:.3f} "
                      f"at t={ev['t_decision']:.2f} s (simulated outcome: {truth})")
    finally:
        srv.shutdown()
        srv.server_close()


if __name__ == "__main__":
    main(*sys.argv[1:])
