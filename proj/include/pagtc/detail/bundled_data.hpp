#pragma once

// Generated by tools/embed_datasets.py from data/*.txt. Do not edit.

#include <array>
#include <string_view>

namespace pagtc::detail {

struct BundledAsset {
    std::string_view name;
    std::string_view text;
};

inline constexpr std::array<BundledAsset, 3> kBundledAssets{{
    {"flor-families", R"edges(# Marriage ties among Renaissance Florentine families (Breiger & Pattison 1986).
# 15 nodes, 20 edges. Columns: family family
Acciaiuoli Medici
Castellani Peruzzi
Castellani Strozzi
Castellani Barbadori
Medici Barbadori
Medici Ridolfi
Medici Tornabuoni
Medici Albizzi
Medici Salviati
Salviati Pazzi
Peruzzi Strozzi
Peruzzi Bischeri
Strozzi Ridolfi
Strozzi Bischeri
Ridolfi Tornabuoni
Tornabuoni Guadagni
Albizzi Ginori
Albizzi Guadagni
Bischeri Guadagni
Guadagni Lamberteschi
)edges"},
    {"les-miserables", R"edges(# Character co-appearance network of Les Miserables (Knuth, Stanford GraphBase).
# 77 nodes, 254 edges. Columns: character character weight (weight ignored)
Napoleon Myriel 1
MlleBaptistine Myriel 8
MmeMagloire Myriel 10
MmeMagloire MlleBaptistine 6
CountessDeLo Myriel 1
Geborand Myriel 1
Champtercier Myriel 1
Cravatte Myriel 1
Count Myriel 2
OldMan Myriel 1
Valjean Labarre 1
Valjean MmeMagloire 3
Valjean MlleBaptistine 3
Valjean Myriel 5
Marguerite Valjean 1
MmeDeR Valjean 1
Isabeau Valjean 1
Gervais Valjean 1
Listolier Tholomyes 4
Fameuil Tholomyes 4
Fameuil Listolier 4
Blacheville Tholomyes 4
Blacheville Listolier 4
Blacheville Fameuil 4
Favourite Tholomyes 3
Favourite Listolier 3
Favourite Fameuil 3
Favourite Blacheville 4
Dahlia Tholomyes 3
Dahlia Listolier 3
Dahlia Fameuil 3
Dahlia Blacheville 3
Dahlia Favourite 5
Zephine Tholomyes 3
Zephine Listolier 3
Zephine Fameuil 3
Zephine Blacheville 3
Zephine Favourite 4
Zephine Dahlia 4
Fantine Tholomyes 3
Fantine Listolier 3
Fantine Fameuil 3
Fantine Blacheville 3
Fantine Favourite 4
Fantine Dahlia 4
Fantine Zephine 4
Fantine Marguerite 2
Fantine Valjean 9
MmeThenardier Fantine 2
MmeThenardier Valjean 7
Thenardier MmeThenardier 13
Thenardier Fantine 1
Thenardier Valjean 12
Cosette MmeThenardier 4
Cosette Valjean 31
Cosette Tholomyes 1
Cosette Thenardier 1
Javert Valjean 17
Javert Fantine 5
Javert Thenardier 5
Javert MmeThenardier 1
Javert Cosette 1
Fauchelevent Valjean 8
Fauchelevent Javert 1
Bamatabois Fantine 1
Bamatabois Javert 1
Bamatabois Valjean 2
Perpetue Fantine 1
Simplice Perpetue 2
Simplice Valjean 3
Simplice Fantine 2
Simplice Javert 1
Scaufflaire Valjean 1
Woman1 Valjean 2
Woman1 Javert 1
Judge Valjean 3
Judge Bamatabois 2
Champmathieu Valjean 3
Champmathieu Judge 3
Champmathieu Bamatabois 2
Brevet Judge 2
Brevet Champmathieu 2
Brevet Valjean 2
Brevet Bamatabois 1
Chenildieu Judge 2
Chenildieu Champmathieu 2
Chenildieu Brevet 2
Chenildieu Valjean 2
Chenildieu Bamatabois 1
Cochepaille Judge 2
Cochepaille Champmathieu 2
Cochepaille Brevet 2
Cochepaille Chenildieu 2
Cochepaille Valjean 2
Cochepaille Bamatabois 1
Pontmercy Thenardier 1
Boulatruelle Thenardier 1
Eponine MmeThenardier 2
Eponine Thenardier 3
Anzelma Eponine 2
Anzelma Thenardier 2
Anzelma MmeThenardier 1
Woman2 Valjean 3
Woman2 Cosette 1
Woman2 Javert 1
MotherInnocent Fauchelevent 3
MotherInnocent Valjean 1
Gribier Fauchelevent 2
MmeBurgon Jondrette 1
Gavroche MmeBurgon 2
Gavroche Thenardier 1
Gavroche Javert 1
Gavroche Valjean 1
Gillenormand Cosette 3
Gillenormand Valjean 2
Magnon Gillenormand 1
Magnon MmeThenardier 1
MlleGillenormand Gillenormand 9
MlleGillenormand Cosette 2
MlleGillenormand Valjean 2
MmePontmercy MlleGillenormand 1
MmePontmercy Pontmercy 1
MlleVaubois MlleGillenormand 1
LtGillenormand MlleGillenormand 2
LtGillenormand Gillenormand 1
LtGillenormand Cosette 1
Marius MlleGillenormand 6
Marius Gillenormand 12
Marius Pontmercy 1
Marius LtGillenormand 1
Marius Cosette 21
Marius Valjean 19
Marius Tholomyes 1
Marius Thenardier 2
Marius Eponine 5
Marius Gavroche 4
BaronessT Gillenormand 1
BaronessT Marius 1
Mabeuf Marius 1
Mabeuf Eponine 1
Mabeuf Gavroche 1
Enjolras Marius 7
Enjolras Gavroche 7
Enjolras Javert 6
Enjolras Mabeuf 1
Enjolras Valjean 4
Combeferre Enjolras 15
Combeferre Marius 5
Combeferre Gavroche 6
Combeferre Mabeuf 2
Prouvaire Gavroche 1
Prouvaire Enjolras 4
Prouvaire Combeferre 2
Feuilly Gavroche 2
Feuilly Enjolras 6
Feuilly Prouvaire 2
Feuilly Combeferre 5
Feuilly Mabeuf 1
Feuilly Marius 1
Courfeyrac Marius 9
Courfeyrac Enjolras 17
Courfeyrac Combeferre 13
Courfeyrac Gavroche 7
Courfeyrac Mabeuf 2
Courfeyrac Eponine 1
Courfeyrac Feuilly 6
Courfeyrac Prouvaire 3
Bahorel Combeferre 5
Bahorel Gavroche 5
Bahorel Courfeyrac 6
Bahorel Mabeuf 2
Bahorel Enjolras 4
Bahorel Feuilly 3
Bahorel Prouvaire 2
Bahorel Marius 1
Bossuet Marius 5
Bossuet Courfeyrac 12
Bossuet Gavroche 5
Bossuet Bahorel 4
Bossuet Enjolras 10
Bossuet Feuilly 6
Bossuet Prouvaire 2
Bossuet Combeferre 9
Bossuet Mabeuf 1
Bossuet Valjean 1
Joly Bahorel 5
Joly Bossuet 7
Joly Gavroche 3
Joly Courfeyrac 5
Joly Enjolras 5
Joly Feuilly 5
Joly Prouvaire 2
Joly Combeferre 5
Joly Mabeuf 1
Joly Marius 2
Grantaire Bossuet 3
Grantaire Enjolras 3
Grantaire Combeferre 1
Grantaire Courfeyrac 2
Grantaire Joly 2
Grantaire Gavroche 1
Grantaire Bahorel 1
Grantaire Feuilly 1
Grantaire Prouvaire 1
MotherPlutarch Mabeuf 3
Gueulemer Thenardier 5
Gueulemer Valjean 1
Gueulemer MmeThenardier 1
Gueulemer Javert 1
Gueulemer Gavroche 1
Gueulemer Eponine 1
Babet Thenardier 6
Babet Gueulemer 6
Babet Valjean 1
Babet MmeThenardier 1
Babet Javert 2
Babet Gavroche 1
Babet Eponine 1
Claquesous Thenardier 4
Claquesous Babet 4
Claquesous Gueulemer 4
Claquesous Valjean 1
Claquesous MmeThenardier 1
Claquesous Javert 1
Claquesous Eponine 1
Claquesous Enjolras 1
Montparnasse Javert 1
Montparnasse Babet 2
Montparnasse Gueulemer 2
Montparnasse Claquesous 2
Montparnasse Valjean 1
Montparnasse Gavroche 1
Montparnasse Eponine 1
Montparnasse Thenardier 1
Toussaint Cosette 2
Toussaint Javert 1
Toussaint Valjean 1
Child1 Gavroche 2
Child2 Gavroche 2
Child2 Child1 3
Brujon Babet 3
Brujon Gueulemer 3
Brujon Thenardier 3
Brujon Gavroche 1
Brujon Eponine 1
Brujon Claquesous 1
Brujon Montparnasse 1
MmeHucheloup Bossuet 1
MmeHucheloup Joly 1
MmeHucheloup Grantaire 1
MmeHucheloup Bahorel 1
MmeHucheloup Courfeyrac 1
MmeHucheloup Gavroche 1
MmeHucheloup Enjolras 1
)edges"},
    {"fig2-grid", R"edges(# 25-node navigable small-world instance used for the one-round
# maximization example (K=3, r=7). Node ids 0..24 appear in order.
0 1
0 2
1 3
1 4
2 4
3 5
4 5
3 6
4 6
5 7
5 8
6 8
2 9
7 9
8 9
1 10
2 10
2 11
4 11
10 11
4 12
6 12
11 12
2 13
8 13
12 13
9 14
13 14
10 15
11 15
11 16
12 16
15 16
2 17
12 17
16 17
13 18
17 18
14 19
18 19
15 20
16 21
20 21
2 22
17 22
19 22
21 22
18 23
19 23
22 23
18 24
19 24
20 24
23 24
)edges"},
}};

} // namespace pagtc::detail
