"""
Empirical running time of the normalization loop on doubles of random words.
"""

import logging
import time

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
import numpy as np
import pandas as pd
import seaborn as sns
import statsmodels.api as sm

from complexes.generators import random_word
from decomposition.engine import DecompositionEngine
from freewords.double import build_double

logger = logging.getLogger(__name__)


class PolynomialityBenchmark:
    def __init__(self, sizes=(30, 90, 270, 810), rank=2, repeats=3, seed=0):
        self.sizes = tuple(sizes)
        self.rank = rank
        self.repeats = repeats
        self.seed = seed
        self.engine = DecompositionEngine()
        self.results = None

    def run(self) -> pd.DataFrame:
        """Time normalize on doubles with the requested square counts"""
        rng = np.random.default_rng(self.seed)
        rows = []
        for size in self.sizes:
            length = max(1, size // 3)
            for repeat in range(self.repeats):
                word = random_word(rng, self.rank, length)
                double = build_double(self.rank, [word])
                start = time.perf_counter()
                form = self.engine.normalize(double)
                elapsed = time.perf_counter() - start
                rows.append({
                    'squares': double.n_squares,
                    'repeat': repeat,
                    'word': str(word),
                    'outcome': form.outcome.value,
                    'sl_moves': form.move_count,
                    'seconds': elapsed,
                })
                logger.debug("%d squares: %.4fs, %d openings", double.n_squares, elapsed, form.move_count)
        self.results = pd.DataFrame(rows)
        return self.results

    def fit_exponent(self, results=None) -> dict:
        """OLS fit of log(seconds) against log(squares)"""
        results = self.results if results is None else results
        timed = results[results['seconds'] > 0]
        X = sm.add_constant(np.log(timed['squares'].astype(float)))
        model = sm.OLS(np.log(timed['seconds'].astype(float)), X).fit()
        low, high = model.conf_int().iloc[1]
        return {
            'exponent': float(model.params.iloc[1]),
            'ci_low': float(low),
            'ci_high': float(high),
            'r_squared': float(model.rsquared),
            'sub_cubic': bool(model.params.iloc[1] < 3),
        }

    def plot(self, path, results=None):
        results = self.results if results is None else results
        fit = self.fit_exponent(results)
        fig, ax = plt.subplots(figsize=(8, 5))
        sns.scatterplot(data=results, x='squares', y='seconds', hue='outcome', ax=ax)
        ax.set_xscale('log')
        ax.set_yscale('log')
        ax.set_xlabel('Squares')
        ax.set_ylabel('normalize wall-clock (s)')
        ax.set_title(f"Normalization time, fitted exponent {fit['exponent']:.2f}")
        ax.grid(True, alpha=0.3)
        plt.tight_layout()
        plt.savefig(path, dpi=150)
        plt.close(fig)
        return fit
