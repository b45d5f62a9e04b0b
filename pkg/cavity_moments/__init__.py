from .version import version as __version__

from .ExactMath import PolyQ, binom_ext, pochhammer, narayana, narayana_poly, jacobi_poly, hyp2f1_terminating
from .PowerSeries import SeriesQ
from .GeneratingFunctions import GenFunId, genfun_eval, diff_to_moments
from .Ensembles import SymmetryClass, EnsembleParams, map_params
from .Moments import (MomentResult, moment_jacobi, moment_laguerre_neg, laguerre_mixed_moment, moment_selberg_like,
                      selberg_constant)
from .Asymptotics import delay_coeff, trans_coeff, trans_diff_coeff, selberg_like_coeff, remainder_scan
from .Identities import run_suite
from .Sampling import sample_ensemble, mc_moment
from .Quadrature import quadrature_moment, limiting_moment
