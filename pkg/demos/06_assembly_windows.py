"""
Window sets: assembled or not
=============================

A window set of width k is a set of 2xk matrices (a top and a bottom row).
It is assembled when its k+1 elements are exactly the cyclic k-wide column
windows of one 2x(k+1) matrix; the checker reconstructs that matrix when it
exists. Two width-2 sets that differ in a single entry show how fragile the
property is: both even have the same projection onto single columns, up to
one reversed duplicate.
"""

from autorbits import WindowSet, is_assembled, project_to_vertices, windows_of_matrix

good = WindowSet.from_elements(
    2, [((1, 2), (4, 5)), ((2, 3), (5, 6)), ((3, 1), (6, 4))]
)
ok, witness = is_assembled(good)
print("first set assembled:", ok)
print("reconstructed matrix rows:", witness)
print("its windows:", sorted(windows_of_matrix(*witness)))

bad = WindowSet.from_elements(
    2, [((1, 2), (4, 5)), ((2, 3), (5, 6)), ((3, 4), (6, 1))]
)
print("\nsecond set assembled:", is_assembled(bad)[0])

print("\nprojection of the first: ", sorted(project_to_vertices(good)))
print("projection of the second:", sorted(project_to_vertices(bad)))

# Round trip: the windows of any matrix with distinct row entries assemble
# back to a matrix with the same window set.
matrix = ((7, 2, 9, 0), (5, 8, 1, 3))
ws = WindowSet.from_elements(3, windows_of_matrix(*matrix))
ok, rebuilt = is_assembled(ws)
print("\nwidth-3 round trip:", ok, "- same windows:", windows_of_matrix(*rebuilt) == ws.elements)
