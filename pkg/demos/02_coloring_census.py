"""Census of all proper matching 4-colorings of the quotient graph.

Two properties turn out to select the same two colorings (up to
renaming the colors): (a) every color class touches all four edge
directions, and (b) every square face of the direction-colored polytope
shows all four colors.  Those two colorings are the chiral twins; this
script verifies (a) and (b) agree on the whole census and shows the
twins are mirror images of each other.
"""

from chiralcube import (classes_hit_all_directions, derive_chiral_colorings,
                        enantiomorph_check, enumerate_matching_colorings,
                        exchanging_isometries, hemicube_embedding,
                        squares_see_all_colors)


def main():
    e = hemicube_embedding()
    census = enumerate_matching_colorings(e.graph,
                                          up_to_color_permutation=True)
    print("proper matching 4-colorings up to renaming: %d" % len(census))
    print()
    print("   colors (one digit per edge)   (a) transversal  (b) all on squares")
    hits = []
    for col in census:
        a = classes_hit_all_directions(e, col)
        b = squares_see_all_colors(e, col)
        mark = "*" if a else " "
        print(" %s %s        %-5s            %s"
              % (mark, "".join(str(c) for c in col.colors), a, b))
        if a != b:
            raise SystemExit("filters disagree on %r" % (col.colors,))
        if a:
            hits.append(col)

    print()
    print("filters agree everywhere; %d colorings survive" % len(hits))

    twins = derive_chiral_colorings(e)
    assert list(twins) == hits

    print()
    print("relation of the survivors: %s"
          % enantiomorph_check(twins[0], twins[1], e))
    ex = exchanging_isometries(e, twins[0], twins[1])
    dets = [d for _, d in ex]
    print("exchanging isometries: %d orientation-preserving, %d reversing"
          % (dets.count(1), dets.count(-1)))


if __name__ == "__main__":
    main()
