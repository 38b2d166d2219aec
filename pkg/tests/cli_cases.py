"""One invocation per CLI command; shared by the golden and determinism tests."""

CASES = {
    "build": ["build", "X^3*Y - 3*X^2*Y^2 + 2*X*Y^3"],
    "build_fp2": ["build", "X^2 + X*Y + Y^2", "--field", "fp:2"],
    "affine": ["affine", "X^3 - X*Y^2"],
    "fixed": ["fixed", "X^3*Y - 3*X^2*Y^2 + 2*X*Y^3"],
    "resdisc": ["resdisc", "X^3 - X*Y^2"],
    "iterate": ["iterate", "X^3 - X*Y^2", "--n", "2"],
    "orbit": ["orbit", "X^3 - 2*Y^3", "--point", "1", "--n", "3"],
    "psi": ["psi", "X^3 - X*Y^2", "--n", "2"],
    "periodic": ["periodic", "X^3*Y - 3*X^2*Y^2 + 2*X*Y^3", "--n", "2"],
    "newton": ["newton", "x^3 - x", "--r", "1"],
    "reconstruct": ["reconstruct", "--points", "0,1,inf", "--r", "1/2"],
    "conjugate": ["conjugate", "X^3 - X*Y^2", "--gamma", "1,1,0,1"],
    "normal_form": ["normal-form", "X^4 - 5*X^2*Y^2 + 4*Y^4"],
    "alpha": ["alpha", "--value", "9/25"],
    "pythagorean": ["pythagorean", "--bound", "13"],
    "aut": ["aut", "X^3 - X*Y^2", "--gamma=-1,0,0,1"],
    "lattes": ["lattes", "--curve", "0,-1,0", "--m", "2"],
    "experiment": ["experiment", "resdisc", "--curve", "0,-1,0", "--m", "2"],
    "check": ["check", "family", "--seed", "7", "--trials", "5"],
    "check_fp": ["check", "euler", "--seed", "7", "--trials", "5", "--field", "fp:7"],
}
