"""Integer ids for the weight functions the quadrature kernels understand.

The compiled and pure-Python kernel twins both dispatch on these ids,
so the two tables must stay in sync with ``_ckernels.pyx``.

Weight definitions (p1, p2 are the slots of the primary and secondary
parameter; u denotes the integration variable of the substituted
transform-pair forms, t = u^2):

====================  =====================================================
power                 x^(-p1)
exp                   exp(-p1*x)
cos                   cos(p1*x)
sin                   sin(p1*x)
exp_recip             x^(-1/2) exp(-p1/x)
cos_recip             x^(-1/2) cos(p1/x)
erf_weight            x^(-1/2) erf(sqrt(p1*x))
scaled_erfc_recip     x^(-1/2) exp(p1/x) erfc(sqrt(p1/x))
shifted_recip         (x + p1)^(-p2)
sqrt_shift            sqrt((sqrt(x^2+1) - 1)/(x^2+1))
exp_over_x            exp(-p1*x)/x
im_rsqrt              Im[(x - i*p1)^(-1/2)] = sqrt((R-x)/(2 R^2)), R=|x+i p1|
glaisher11            (sinh x - sin x)/(x^2 (cosh x + cos x))
glaisher17            sinh(x/2) sin(x/2)/(x (cosh x + cos x))
sech_aux              x^p2 * exp(-p1*x^2/pi) * sech(x)        (p2 in {0,1})
tp_rhs3_u             2u F(u^2) sech(sqrt(pi) u)              (F by p2)
tp_rhs1_u             2 sqrt(pi) F(u^2) sinh(2u sqrt(pi/3))/cosh(u sqrt(3pi))
====================  =====================================================

F selectors for the transform-pair forms (slot p2):
0 -> F(t) = exp(-a t); 1 -> exp(-a t)/sqrt(pi t); 2 -> sin(a t)/sqrt(pi t),
with a in slot p1.
"""

FORM_POWER = 0
FORM_EXP = 1
FORM_COS = 2
FORM_SIN = 3
FORM_EXP_RECIP = 4
FORM_COS_RECIP = 5
FORM_ERF_WEIGHT = 6
FORM_SCALED_ERFC_RECIP = 7
FORM_SHIFTED_RECIP = 8
FORM_SQRT_SHIFT = 9
FORM_EXP_OVER_X = 10
FORM_IM_RSQRT = 11
FORM_GLAISHER11 = 12
FORM_GLAISHER17 = 13
FORM_SECH_AUX = 14
FORM_TP_RHS3_U = 15
FORM_TP_RHS1_U = 16

FSEL_EXP = 0
FSEL_EXP_SQRT = 1
FSEL_SIN_SQRT = 2

FORM_IDS = {
    "power": FORM_POWER,
    "exp": FORM_EXP,
    "cos": FORM_COS,
    "sin": FORM_SIN,
    "exp_recip": FORM_EXP_RECIP,
    "cos_recip": FORM_COS_RECIP,
    "erf_weight": FORM_ERF_WEIGHT,
    "scaled_erfc_recip": FORM_SCALED_ERFC_RECIP,
    "shifted_recip": FORM_SHIFTED_RECIP,
    "sqrt_shift": FORM_SQRT_SHIFT,
    "exp_over_x": FORM_EXP_OVER_X,
    "im_rsqrt": FORM_IM_RSQRT,
    "glaisher11": FORM_GLAISHER11,
    "glaisher17": FORM_GLAISHER17,
    "sech_aux": FORM_SECH_AUX,
    "tp_rhs3_u": FORM_TP_RHS3_U,
    "tp_rhs1_u": FORM_TP_RHS1_U,
}

FORM_NAMES = {v: k for k, v in FORM_IDS.items()}
