//! Text of every Hamiltonian and, separately, of every displayed system of
//! equations. Keeping two sources lets the consistency check catch slips in
//! either one.

/// `t * H` for each system; the Hamiltonian is this polynomial over `t`.
pub(super) const T_HAMILTONIAN: &[(&str, &str)] = &[
    (
        "D5",
        "x^2*y^2 + x*y^2 - (a0+a1)*x*y - a0*y
         + z^2*w^2 + (a0+a1+2*a2)*z*w + z + t*w
         + q^2*p^2 - t*q^2*p - (1-a4-a5)*q*p - a4*t*q
         + 2*(x*z - w*p)",
    ),
    (
        "B5a",
        "x^2*y^2 + 2*a0*x*y - x
         + z^2*w^2 + 2*(a0+a1+a2)*z*w + z + t*w
         + q^2*p^2 - t*q^2*p - 2*(a0+a1+a2+a3)*q*p - a4*t*q
         - (2*(x*y-a1)*y*z + 2*w*p)",
    ),
    (
        "B5b",
        "x^2*y^2 + x*y^2 - (a0+a1)*x*y - a0*y
         + z^2*w^2 + (a0+a1+2*a2)*z*w + z + t*w
         + q^2*p^2 - (2*a5-1)*q*p + t*p
         + 2*x*z + 2*w*q*(q*p+a4)",
    ),
    (
        "D62",
        "x^2*y^2 + 2*a0*x*y - x
         + z^2*w^2 + 2*(a0+a1+a2)*z*w + z + t*w
         + q^2*p^2 - (2*a5-1)*q*p + t*p
         + 2*(w*q*(q*p+a4) - y*z*(x*y-a1))",
    ),
    ("H1", "q^2*p^2 + q*p^2 - (a0+a1)*q*p - a0*p"),
    ("H2", "q^2*p^2 + (1-2*a2)*q*p + t*p"),
    ("H3", "q^2*p^2 + 2*a2*q*p - q"),
    ("H4", "q^2*p^2 - t*q^2*p - (1-a0-a1)*q*p - a0*t*q"),
    ("HIII_D7", "q^2*p^2 + a1*q*p + q + t*p"),
];

/// Displayed right-hand sides `(dx, dy, dz, dw, dq, dp)/dt`.
pub(super) const DISPLAYED_ODE: &[(&str, [&str; 6])] = &[
    (
        "D5",
        [
            "(2*x^2*y + 2*x*y - (a0+a1)*x - a0)/t",
            "-(2*x*y^2 + y^2 - (a0+a1)*y + 2*z)/t",
            "(2*z^2*w + (a0+a1+2*a2)*z + t - 2*p)/t",
            "-(2*z*w^2 + (a0+a1+2*a2)*w + 1 + 2*x)/t",
            "(2*q^2*p - t*q^2 - (1-a4-a5)*q - 2*w)/t",
            "(-2*q*p^2 + 2*t*q*p + (1-a4-a5)*p + a4*t)/t",
        ],
    ),
    (
        "B5a",
        [
            "(2*x^2*y + 2*a0*x)/t - (4*x*y*z - 2*a1*z)/t",
            "-(2*x*y^2 + 2*a0*y - 1)/t + 2*y^2*z/t",
            "(2*z^2*w + 2*(a0+a1+a2)*z + t)/t - 2*p/t",
            "-(2*z*w^2 + 2*(a0+a1+a2)*w + 1)/t + 2*(x*y-a1)*y/t",
            "(2*q^2*p - t*q^2 - 2*(a0+a1+a2+a3)*q)/t - 2*w/t",
            "(-2*q*p^2 + 2*t*q*p + 2*(a0+a1+a2+a3)*p + a4*t)/t",
        ],
    ),
    (
        "B5b",
        [
            "(2*x^2*y + 2*x*y - (a0+a1)*x - a0)/t",
            "-(2*x*y^2 + y^2 - (a0+a1)*y)/t - 2*z/t",
            "(2*z^2*w + (a0+a1+2*a2)*z + t)/t + 2*q*(q*p+a4)/t",
            "-(2*z*w^2 + (a0+a1+2*a2)*w + 1)/t - 2*x/t",
            "(2*q^2*p - (2*a5-1)*q + t)/t + 2*w*q^2/t",
            "(-2*q*p^2 + (2*a5-1)*p)/t - (4*w*q*p + 2*a4*w)/t",
        ],
    ),
    (
        "D62",
        [
            "(2*x^2*y + 2*a0*x)/t - 2*(2*x*y*z - a1*z)/t",
            "-(2*x*y^2 + 2*a0*y - 1)/t + 2*y^2*z/t",
            "(2*z^2*w + 2*(a0+a1+a2)*z + t)/t + 2*q*(q*p+a4)/t",
            "-(2*z*w^2 + 2*(a0+a1+a2)*w + 1)/t + 2*y*(x*y-a1)/t",
            "(2*q^2*p - (2*a5-1)*q + t)/t + 2*w*q^2/t",
            "(-2*q*p^2 + (2*a5-1)*p)/t - 2*(2*w*q*p + a4*w)/t",
        ],
    ),
];

/// First integral of the `H1` flow.
pub(super) const H1_INTEGRAL: &str = "q^2*p^2 + q*p^2 - (a0+a1)*q*p - a0*p";
