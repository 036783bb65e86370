"""
Orbits of representations of the equioriented type A quiver: generic
multisegments, the components of the complement of the dense orbit,
orbit counts and the tilting fan.

"""
