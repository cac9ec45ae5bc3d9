#!/usr/bin/env python3
"""
lltlab - LLT Polynomials and e-Positivity
=========================================
Main entry point.

Usage:
    python main.py llt --path 0,1,2,1,2,2 --marks all --method def --shift
    python main.py eexpand --path 0,0,1 --marks none --method recursion
    python main.py hl --op B --word 3,1,1 --shift
    python main.py macdonald --mu 3,1,1 --shift
    python main.py nabla --n 4 --hilbert --q 2 --t 1
    python main.py verify --suite prop31 --n 6 --jobs 4
    python main.py table --kind kreweras --n 6
"""

import sys
import argparse
import datetime
import logging
import traceback
from pathlib import Path


def setup_logging(verbosity: int, to_file: bool, log_dir: Path):
    """Stderr handler by verbosity, optional timestamped log file, crash log hook"""
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG

    handlers = [logging.StreamHandler(sys.stderr)]
    handlers[0].setLevel(level)

    if to_file:
        log_dir.mkdir(parents=True, exist_ok=True)
        timestamp = datetime.datetime.now().strftime("%Y%m%d_%H%M%S")
        log_file = log_dir / f"lltlab_{timestamp}.log"
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setLevel(logging.DEBUG)
        handlers.append(file_handler)
        print(f"Logging to: {log_file.absolute()}", file=sys.stderr)

    logging.basicConfig(
        level=logging.DEBUG if to_file else level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        handlers=handlers,
    )

    crash_log = log_dir / "crash.log"

    def crash_handler(exc_type, exc_value, exc_tb):
        crash_time = datetime.datetime.now().strftime("%Y-%m-%d %H:%M:%S")
        crash_info = f"\n{'='*60}\nCRASH at {crash_time}\n{'='*60}\n"
        crash_info += ''.join(traceback.format_exception(exc_type, exc_value, exc_tb))
        crash_info += f"\n{'='*60}\n"

        print(crash_info, file=sys.stderr)

        try:
            crash_log.parent.mkdir(parents=True, exist_ok=True)
            with open(crash_log, 'a', encoding="utf-8") as f:
                f.write(crash_info)
        except OSError:
            pass

    sys.excepthook = crash_handler


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv

    # Logging flags live on every subcommand; read them before dispatch
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("-v", "--verbose", action="count", default=0)
    pre.add_argument("--log", action="store_true")
    pre.add_argument("--config", default=None)
    known, _ = pre.parse_known_args(argv)

    from lltlab.config import load_config
    from lltlab.cli import dispatch

    settings = load_config(Path(known.config) if known.config else None)
    setup_logging(known.verbose, known.log, settings.log_dir)

    sys.exit(dispatch(argv))


if __name__ == "__main__":
    main()
