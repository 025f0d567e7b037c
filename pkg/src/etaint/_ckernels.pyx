# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled twin of the quadrature hot kernels.

Keep in sync with ``_pykernels.py``: same dispatch table, same
summation order, same guards, so the two backends agree to the last
few ulp (both sit on the same libm).
"""

from libc.math cimport cos, cosh, erf, erfc, exp, fabs, hypot, log, pow, sin, sinh, sqrt

BACKEND_NAME = "compiled"

cdef double M_PI = 3.141592653589793
cdef double _EPS = 2.220446049250313e-16
cdef double _UFLOW_GUARD = 2.2250738585072014e-308 / (50.0 * _EPS)
cdef double _SQRT_PI = sqrt(M_PI)
cdef double _TP1_C1 = 2.0 * sqrt(M_PI / 3.0)
cdef double _TP1_C2 = sqrt(3.0 * M_PI)

cdef double[8] _XGK = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
]
cdef double[8] _WGK = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
]
cdef double[4] _WG = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
]

# Form ids; mirror etaint._forms.
DEF FORM_POWER = 0
DEF FORM_EXP = 1
DEF FORM_COS = 2
DEF FORM_SIN = 3
DEF FORM_EXP_RECIP = 4
DEF FORM_COS_RECIP = 5
DEF FORM_ERF_WEIGHT = 6
DEF FORM_SCALED_ERFC_RECIP = 7
DEF FORM_SHIFTED_RECIP = 8
DEF FORM_SQRT_SHIFT = 9
DEF FORM_EXP_OVER_X = 10
DEF FORM_IM_RSQRT = 11
DEF FORM_GLAISHER11 = 12
DEF FORM_GLAISHER17 = 13
DEF FORM_SECH_AUX = 14
DEF FORM_TP_RHS3_U = 15
DEF FORM_TP_RHS1_U = 16


cdef double _erfc_scaled(double x):
    # exp(x^2) erfc(x) for x >= 0: direct product below 26, asymptotic beyond.
    cdef double r2, term, acc
    cdef int k
    if x < 26.0:
        return exp(x * x) * erfc(x)
    r2 = 0.5 / (x * x)
    term = 1.0
    acc = 1.0
    for k in range(1, 12):
        term *= -(2 * k - 1) * r2
        acc += term
        if fabs(term) < 1e-17 * acc:
            break
    return acc / (x * _SQRT_PI)


cdef double _sinh_minus_sin(double x):
    # series below |x| = 0.5 removes the ~x cancellation
    cdef double x2, x4, term, acc
    cdef int m
    if fabs(x) >= 0.5:
        return sinh(x) - sin(x)
    x2 = x * x
    x4 = x2 * x2
    term = x * x2 / 3.0
    acc = term
    for m in range(7, 16, 4):
        term *= x4 / ((m - 3) * (m - 2) * (m - 1) * m)
        acc += term
    return acc


cdef double _eta_series(double xe):
    cdef double c = M_PI * xe / 12.0
    cdef double acc = 0.0, coef, e, t
    cdef int n = 0, m
    while n < 64:
        m = n % 6
        if m == 0 or m == 5:
            coef = 1.0
        elif m == 2 or m == 3:
            coef = -1.0
        else:
            coef = 0.0
        if coef != 0.0:
            e = c * (2 * n + 1) * (2 * n + 1)
            if e > 745.0:
                break
            t = exp(-e)
            acc += coef * t
            if t <= 1e-17 * acc:
                break
        n += 1
    return acc


cdef double _eta3_series(double xe):
    cdef double c = M_PI * xe / 4.0
    cdef double acc = 0.0, e, t
    cdef int n = 0
    while n < 64:
        e = c * (2 * n + 1) * (2 * n + 1)
        if e > 745.0:
            break
        t = (2 * n + 1) * exp(-e)
        if n % 2 == 0:
            acc += t
        else:
            acc -= t
        if t <= 1e-17 * acc:
            break
        n += 1
    return acc


cpdef double eta_point(double x):
    """eta(ix) to machine precision (modular acceleration below x = 1)."""
    if x <= 0.0:
        return 0.0
    if x < 1.0:
        return _eta_series(1.0 / x) / sqrt(x)
    return _eta_series(x)


cpdef double eta3_point(double x):
    """eta^3(ix) to machine precision (modular acceleration below x = 1)."""
    if x <= 0.0:
        return 0.0
    if x < 1.0:
        return _eta3_series(1.0 / x) / (x * sqrt(x))
    return _eta3_series(x)


cdef double _sech(double x):
    if x > 350.0:
        return 2.0 * exp(-x)
    return 1.0 / cosh(x)


cdef double _weight(int form, double p1, double p2, double x):
    cdef double e, r2, s, r, base, sech_v, ratio, b
    if form == FORM_POWER:
        return pow(x, -p1)
    elif form == FORM_EXP:
        e = p1 * x
        return exp(-e) if e <= 745.0 else 0.0
    elif form == FORM_COS:
        return cos(p1 * x)
    elif form == FORM_SIN:
        return sin(p1 * x)
    elif form == FORM_EXP_RECIP:
        e = p1 / x
        return exp(-e) / sqrt(x) if e <= 745.0 else 0.0
    elif form == FORM_COS_RECIP:
        return cos(p1 / x) / sqrt(x)
    elif form == FORM_ERF_WEIGHT:
        return erf(sqrt(p1 * x)) / sqrt(x)
    elif form == FORM_SCALED_ERFC_RECIP:
        return _erfc_scaled(sqrt(p1 / x)) / sqrt(x)
    elif form == FORM_SHIFTED_RECIP:
        return pow(x + p1, -p2)
    elif form == FORM_SQRT_SHIFT:
        r2 = x * x + 1.0
        s = sqrt(r2)
        return sqrt(x * x / (s + 1.0) / r2)
    elif form == FORM_EXP_OVER_X:
        e = p1 * x
        return exp(-e) / x if e <= 745.0 else 0.0
    elif form == FORM_IM_RSQRT:
        r = hypot(x, p1)
        return sqrt(p1 * p1 / (r + x) / (2.0 * r * r))
    elif form == FORM_GLAISHER11:
        if x == 0.0:
            return 0.0
        if x > 350.0:
            return 1.0 / (x * x)
        return _sinh_minus_sin(x) / (x * x * (cosh(x) + cos(x)))
    elif form == FORM_GLAISHER17:
        if x == 0.0:
            return 0.0
        if x > 350.0:
            return sin(0.5 * x) * exp(-0.5 * x) / x
        return sinh(0.5 * x) * sin(0.5 * x) / (x * (cosh(x) + cos(x)))
    elif form == FORM_SECH_AUX:
        e = p1 * x * x / M_PI
        if e > 745.0:
            return 0.0
        base = exp(-e) * _sech(x)
        return x * base if p2 == 1.0 else base
    elif form == FORM_TP_RHS3_U:
        sech_v = _sech(_SQRT_PI * x)
        if p2 == 0.0:
            e = p1 * x * x
            return 2.0 * x * exp(-e) * sech_v if e <= 745.0 else 0.0
        if p2 == 1.0:
            e = p1 * x * x
            return (2.0 / _SQRT_PI) * exp(-e) * sech_v if e <= 745.0 else 0.0
        return (2.0 / _SQRT_PI) * sin(p1 * x * x) * sech_v
    elif form == FORM_TP_RHS1_U:
        b = _TP1_C2 * x
        if b > 350.0:
            ratio = exp((_TP1_C1 - _TP1_C2) * x) * (1.0 - exp(-2.0 * _TP1_C1 * x))
        else:
            ratio = sinh(_TP1_C1 * x) / cosh(b)
        if p2 == 0.0:
            e = p1 * x * x
            return 2.0 * _SQRT_PI * exp(-e) * ratio if e <= 745.0 else 0.0
        if p2 == 1.0:
            e = p1 * x * x
            return (2.0 / x) * exp(-e) * ratio if e <= 745.0 else 0.0
        return (2.0 / x) * sin(p1 * x * x) * ratio
    raise ValueError(f"unknown form id {form}")


cpdef double kernel_weight(int form, double p1, double p2, double x):
    """The weight f(x) multiplying the eta power; see _forms for the table."""
    return _weight(form, p1, p2, x)


cdef double _integrand(int form, int n, double p1, double p2, double x):
    cdef double w = _weight(form, p1, p2, x)
    if n == 0 or w == 0.0:
        return w
    if n == 1:
        return w * eta_point(x)
    return w * eta3_point(x)


cpdef double integrand(int form, int n, double p1, double p2, double x):
    """f(x) * eta^n(ix) at a single abscissa."""
    return _integrand(form, n, p1, p2, x)


cpdef tuple panel(int form, int n, double p1, double p2, double a, double b):
    """One Gauss-Kronrod 7/15 panel over [a, b]; see the Python twin."""
    cdef double centr = 0.5 * (a + b)
    cdef double hl = 0.5 * (b - a)
    cdef double fc = _integrand(form, n, p1, p2, centr)
    cdef double resk = _WGK[7] * fc
    cdef double resg = _WG[3] * fc
    cdef double resabs = fabs(resk)
    cdef double[7] fv1
    cdef double[7] fv2
    cdef double dx, f1, f2, s, reskh, resasc, value, err, scaled, floor
    cdef int j
    for j in range(7):
        dx = hl * _XGK[j]
        f1 = _integrand(form, n, p1, p2, centr - dx)
        f2 = _integrand(form, n, p1, p2, centr + dx)
        fv1[j] = f1
        fv2[j] = f2
        s = f1 + f2
        resk += _WGK[j] * s
        if j % 2 == 1:
            resg += _WG[(j - 1) // 2] * s
        resabs += _WGK[j] * (fabs(f1) + fabs(f2))
    reskh = 0.5 * resk
    resasc = _WGK[7] * fabs(fc - reskh)
    for j in range(7):
        resasc += _WGK[j] * (fabs(fv1[j] - reskh) + fabs(fv2[j] - reskh))
    value = resk * hl
    resabs *= fabs(hl)
    resasc *= fabs(hl)
    err = fabs((resk - resg) * hl)
    if resasc != 0.0 and err != 0.0:
        scaled = pow(200.0 * err / resasc, 1.5)
        err = resasc * (scaled if scaled < 1.0 else 1.0)
    if resabs > _UFLOW_GUARD:
        floor = 50.0 * _EPS * resabs
        if floor > err:
            err = floor
    return value, err, resabs
