"""Walk through the (3,2) net on the six lines of the braid arrangement."""

from netdual import alexander_dual, build_J, j_x, net_check_direct, net_check_dual
from netdual.catalog import catalog, coordinates
from netdual.arrangements import l2_from_coordinates

arr, net = catalog("braid-a3")
print("triple points:", arr.point_lists())
print("rebuilt from coordinates:", l2_from_coordinates(coordinates("braid-a3")) == arr)
print("J =", build_J(arr))
print("J_X =", j_x(net))
print("dual of J_X =", alexander_dual(j_x(net)))
print(net.describe())
print("  dual:  ", net_check_dual(net).reason())
print("  direct:", net_check_direct(arr, net).reason())

# dropping one point breaks both criteria
smaller = net.with_X(net.X[1:])
print(smaller.describe())
print("  dual:  ", net_check_dual(smaller).reason())
print("  direct:", net_check_direct(arr, smaller).reason())
