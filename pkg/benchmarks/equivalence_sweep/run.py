"""Runs the minor/family equivalence sweep and reports timings."""

import logging
import sys
import time

import hydra
from omegaconf import DictConfig

from circ_minors.cli.utils import limits_kwargs
from circ_minors.oracle import sweep

logger = logging.getLogger(__name__)


@hydra.main(config_path="conf", config_name="config", version_base=None)
def main(cfg: DictConfig):
    start = time.time()
    reports = sweep(
        check_isomorphism=cfg.sweep.check_isomorphism,
        n_min=cfg.sweep.n_min,
        n_max=cfg.sweep.n_max,
        num_random=cfg.sweep.num_random,
        random_n_min=cfg.sweep.random_n_min,
        random_n_max=cfg.sweep.random_n_max,
        seed=cfg.sweep.seed,
        **limits_kwargs(cfg.circ_minors),
    )
    failed = [r for r in reports if not r.ok]
    for report in failed:
        logger.error(f"{report.name}:\n" + "\n".join(report.discrepancies))
    near_misses = sum(len(r.near_misses) for r in reports)
    logger.info(f"{near_misses} near miss(es) between circulant families and witnesses.")
    logger.info(
        f"Checked {len(reports)} matrices in {time.time() - start:.1f}s; "
        f"{len(failed)} with discrepancies."
    )
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
