"""The Galois connection between submonoids and natural families of
subsets, and the bijection between its closed objects on both sides."""

from galmon.actions import default_site
from galmon.galois import galois_correspondence, connection_laws
from galmon import samples

s3 = samples.symmetric3()
report = galois_correspondence(s3, default_site(s3))

print("closed submonoids of S3:")
for entry in report["bijection"]:
    sizes = [len(v) for v in entry["subfunctor"].values()]
    print("  {%s}  <->  subfunctor of total size %d"
          % (",".join(entry["submonoid"]), sum(sizes)))
assert report["bijective"] and report["inclusion_reversing"]
assert len(report["closed_submonoids"]) == 6

# the chain of Z4 reverses into a chain of subfunctors
z4 = samples.cyclic(4)
rep4 = galois_correspondence(z4, default_site(z4))
chain = [tuple(s) for s in rep4["closed_submonoids"]]
print("Z4 closed chain:", " < ".join("{%s}" % ",".join(s) for s in chain))
assert rep4["bijective"] and rep4["inclusion_reversing"]

# the connection laws also hold for a monoid that is not a group
e2 = samples.idempotent_pair()
assert connection_laws(e2, default_site(e2))
print("connection laws hold for the idempotent monoid E2")

print("ok")
