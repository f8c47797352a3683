from cubicdisc.main import run

raise SystemExit(run())
