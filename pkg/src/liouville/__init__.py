"""Computational geometry of Liouville line elements.

Curve energy and length on parametrized surfaces, a catalog of classical
charts, equal-diagonal-energy verification for rectangles of parameter lines,
elliptic integrals of the third kind with a Lie-series inversion, the
conformal chart of the triaxial ellipsoid, geodesic integration, and the
n-dimensional diagonal-energy statement.
"""

from .errors import (AccuracyError, DomainError, InvalidMetricError,
                     LiouvilleError, SingularityError, TurningPointError,
                     UnknownChartError, UnsupportedChartError)
from .quadrature import QuadratureSpec, QuadScheme, adaptive_quad, gauss_legendre, integrate
from .geometry import (CLASS_IMPLIES, Domain, LIOUVILLE_CLASSES, LineElementClass,
                       MetricField, ParamCurve, ParamPoint, classify_line_element,
                       curve_energy, curve_length, discrete_energy, discrete_length,
                       is_staeckel_decomposition, line_element_classes,
                       quadratic_form, validate_velocity)
from .catalog import (ChartMetricCheck, SurfaceChart, catalog, chart_names,
                      check_chart_metric, induced_metric, verify_catalog_metrics)
from .diagonals import (ConverseDiagnostics, DiagonalPair, RectSpec,
                        converse_diagnostics, diagonal_energy_gap, diagonals,
                        discrete_diagonal_gap, ivory_chords, oddness_defect,
                        random_rectangles)
from .elliptic import (LieSeriesSpec, MAX_SERIES_ORDER, ellint_pi_jacobi,
                       ellint_pi_trig, gen_am, gen_cn, gen_dn, gen_en, gen_sn,
                       gen_sn_ode, gen_sn_state, jacobi_standard,
                       lie_sn_monomial_coefficients, lie_sn_series)
from .ellipsoid import (ConformalTables, EllipsoidAxes, curvature_line_chart,
                        curvature_line_embed, forward_maps, gen_sn_cross_check,
                        liouville_chart, weight_f)
from .geodesics import (GeodesicPolyline, LiouvilleSplit, geodesic_residual,
                        integrate_liouville_geodesic, liouville_geodesic_field,
                        polyline_metric_length, unit_speed_defect)
from .ndimensional import (MAX_DIMENSION, NdDiagonal, NdMetric, NdRect,
                           nd_diagonal_energies, nd_diagonals, nd_energy_gap)

__version__ = "0.1.0"
