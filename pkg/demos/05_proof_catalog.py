# The catalog of scalar certificate functions: sweep every claim over
# its default domain, then show a custom grid exposing a violation just
# outside a claimed domain.

from meanineq import AuxFunctionId, GridAxis, aux_eval, aux_sign_check, r0_value

print(f"{'tag':26s} {'points':>8s} {'worst margin':>13s}  verdict")
for tag in AuxFunctionId:
    rep = aux_sign_check(tag)
    print(f"{tag.value:26s} {rep.points_checked:8d} {rep.margin:13.3e}  {rep.verdict}")

print("\nanchors:")
print("  exponent margin at (3/4, 1)   =", aux_eval(AuxFunctionId.EXPONENT_MARGIN, (0.75, 1.0)))
print("  tangent slope at (1/3, r0)    =", aux_eval(AuxFunctionId.TANGENT_SLOPE, (1 / 3, r0_value())))
print("  tangent cubic at x = 1        =", aux_eval(AuxFunctionId.TANGENT_CUBIC, (1.0, 0.2, 0.8)))

# The claims are tight: immediately outside the claimed weight range the
# tangent slope changes sign.
outside = aux_sign_check(
    AuxFunctionId.TANGENT_SLOPE,
    grid={"q": GridAxis(0.55, 0.7, 30), "r": GridAxis(0.99, 1.0, 3)},
)
print("\ntangent slope past q = 1/2:", outside.verdict)
print("  worst point:", outside.worst_point, " value:", f"{outside.worst_value:.4f}")
