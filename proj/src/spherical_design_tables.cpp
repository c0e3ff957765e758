// Generated by tools/gen_spherical_designs.py. Do not edit by hand.

#include "spherical_design_tables.hpp"

namespace wavekin::detail {

// octahedron vertices, closed form; max |sum Y_lm|, 1<=l<=3: 3.33e-16
static constexpr double kDesign6[6][3] = {
    {1.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00},
    {0.00000000000000000e+00, 1.00000000000000000e+00, 0.00000000000000000e+00},
    {0.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00},
    {-1.00000000000000000e+00, -0.00000000000000000e+00, -0.00000000000000000e+00},
    {-0.00000000000000000e+00, -1.00000000000000000e+00, -0.00000000000000000e+00},
    {-0.00000000000000000e+00, -0.00000000000000000e+00, -1.00000000000000000e+00},
};

// icosahedron vertices, closed form; max |sum Y_lm|, 1<=l<=5: 1.86e-15
static constexpr double kDesign12[12][3] = {
    {0.00000000000000000e+00, 5.25731112119133592e-01, 8.50650808352039989e-01},
    {5.25731112119133592e-01, 8.50650808352039989e-01, 0.00000000000000000e+00},
    {8.50650808352039989e-01, 0.00000000000000000e+00, 5.25731112119133592e-01},
    {0.00000000000000000e+00, 5.25731112119133592e-01, -8.50650808352039989e-01},
    {5.25731112119133592e-01, -8.50650808352039989e-01, 0.00000000000000000e+00},
    {-8.50650808352039989e-01, 0.00000000000000000e+00, 5.25731112119133592e-01},
    {0.00000000000000000e+00, -5.25731112119133592e-01, 8.50650808352039989e-01},
    {-5.25731112119133592e-01, 8.50650808352039989e-01, 0.00000000000000000e+00},
    {8.50650808352039989e-01, 0.00000000000000000e+00, -5.25731112119133592e-01},
    {0.00000000000000000e+00, -5.25731112119133592e-01, -8.50650808352039989e-01},
    {-5.25731112119133592e-01, -8.50650808352039989e-01, 0.00000000000000000e+00},
    {-8.50650808352039989e-01, 0.00000000000000000e+00, -5.25731112119133592e-01},
};

// antipodal 5-design, least-squares solve; max |sum Y_lm|, 1<=l<=5: 2.00e-15
static constexpr double kDesign24[24][3] = {
    {-1.68486141189056277e-01, 7.27635863978895014e-01, -6.64949975320631381e-01},
    {-9.75464043355353944e-02, -6.35515855876255364e-01, -7.65900970054927521e-01},
    {-9.08551883398763027e-01, -1.97168272255050153e-01, -3.68317997915549700e-01},
    {-7.22853200003080509e-01, -5.11612894725526735e-01, 4.64473354667276628e-01},
    {2.34941851366870763e-01, 9.49500988920263800e-01, -2.07966820708853278e-01},
    {4.22691908256329282e-02, -2.12482371275765719e-01, 9.76250253471912743e-01},
    {-7.31520314912803893e-01, 7.41640324570937287e-02, -6.77774095963821432e-01},
    {-4.08915969536638724e-01, 1.97402925752595854e-01, 8.90965664188147044e-01},
    {-6.08675716427852564e-01, 7.31233405653783919e-01, 3.07914888706293688e-01},
    {-9.31157145618038862e-01, -4.26231557666306021e-02, 3.62118263495449733e-01},
    {3.92519379053440642e-01, 8.44197938692353489e-01, 3.65045719568224514e-01},
    {-6.80576245412915615e-01, 7.25040876940475698e-01, -1.05506876292708829e-01},
    {1.68486141189056277e-01, -7.27635863978895014e-01, 6.64949975320631381e-01},
    {9.75464043355353944e-02, 6.35515855876255364e-01, 7.65900970054927521e-01},
    {9.08551883398763027e-01, 1.97168272255050153e-01, 3.68317997915549700e-01},
    {7.22853200003080509e-01, 5.11612894725526735e-01, -4.64473354667276628e-01},
    {-2.34941851366870763e-01, -9.49500988920263800e-01, 2.07966820708853278e-01},
    {-4.22691908256329282e-02, 2.12482371275765719e-01, -9.76250253471912743e-01},
    {7.31520314912803893e-01, -7.41640324570937287e-02, 6.77774095963821432e-01},
    {4.08915969536638724e-01, -1.97402925752595854e-01, -8.90965664188147044e-01},
    {6.08675716427852564e-01, -7.31233405653783919e-01, -3.07914888706293688e-01},
    {9.31157145618038862e-01, 4.26231557666306021e-02, -3.62118263495449733e-01},
    {-3.92519379053440642e-01, -8.44197938692353489e-01, -3.65045719568224514e-01},
    {6.80576245412915615e-01, -7.25040876940475698e-01, 1.05506876292708829e-01},
};

// antipodal 7-design, least-squares solve; max |sum Y_lm|, 1<=l<=7: 2.86e-15
static constexpr double kDesign32[32][3] = {
    {2.37584270077497356e-01, 2.27339125256988628e-01, -9.44389028281846343e-01},
    {9.09652403413126698e-01, -2.97342356284689358e-01, -2.90034529192286172e-01},
    {7.27642101617556714e-01, 6.80944247033131722e-01, -8.27762308036951722e-02},
    {3.38197884360097956e-01, -1.97861335045072223e-01, 9.20039718223368608e-01},
    {6.52042360446032143e-01, -7.58061237901524465e-01, -1.35617025175671039e-02},
    {6.56553002398216901e-01, 3.24693103896239843e-01, 6.80817555093956583e-01},
    {-3.17186667520068022e-01, -7.37826192619002175e-01, 5.95823067221185165e-01},
    {3.28332979903802502e-01, -7.44564904371786795e-01, 5.81223328407696527e-01},
    {1.82799418038188839e-02, 9.94730338989869067e-01, -1.00883082926470233e-01},
    {-5.13391813535985619e-01, 3.32657633111125617e-01, 7.91054830544087761e-01},
    {2.69391217498198110e-01, -8.38836909373470774e-01, -4.73054977151284306e-01},
    {-7.92427716924886449e-01, -2.55828234787451092e-01, 5.53723963482481873e-01},
    {-3.98140012169622803e-01, -8.32718917666672609e-01, -3.84790507769640799e-01},
    {9.72538310221927826e-01, 1.66148495797547952e-01, 1.62984393408968753e-01},
    {-8.15164267201140769e-01, 3.40504797373810286e-01, -4.68576248271129758e-01},
    {-8.76929963178503524e-02, -4.53146922903651661e-01, -8.87112058682413274e-01},
    {-2.37584270077497356e-01, -2.27339125256988628e-01, 9.44389028281846343e-01},
    {-9.09652403413126698e-01, 2.97342356284689358e-01, 2.90034529192286172e-01},
    {-7.27642101617556714e-01, -6.80944247033131722e-01, 8.27762308036951722e-02},
    {-3.38197884360097956e-01, 1.97861335045072223e-01, -9.20039718223368608e-01},
    {-6.52042360446032143e-01, 7.58061237901524465e-01, 1.35617025175671039e-02},
    {-6.56553002398216901e-01, -3.24693103896239843e-01, -6.80817555093956583e-01},
    {3.17186667520068022e-01, 7.37826192619002175e-01, -5.95823067221185165e-01},
    {-3.28332979903802502e-01, 7.44564904371786795e-01, -5.81223328407696527e-01},
    {-1.82799418038188839e-02, -9.94730338989869067e-01, 1.00883082926470233e-01},
    {5.13391813535985619e-01, -3.32657633111125617e-01, -7.91054830544087761e-01},
    {-2.69391217498198110e-01, 8.38836909373470774e-01, 4.73054977151284306e-01},
    {7.92427716924886449e-01, 2.55828234787451092e-01, -5.53723963482481873e-01},
    {3.98140012169622803e-01, 8.32718917666672609e-01, 3.84790507769640799e-01},
    {-9.72538310221927826e-01, -1.66148495797547952e-01, -1.62984393408968753e-01},
    {8.15164267201140769e-01, -3.40504797373810286e-01, 4.68576248271129758e-01},
    {8.76929963178503524e-02, 4.53146922903651661e-01, 8.87112058682413274e-01},
};

// antipodal 9-design, least-squares solve; max |sum Y_lm|, 1<=l<=9: 7.33e-15
static constexpr double kDesign48[48][3] = {
    {-3.71544413058159217e-01, 2.88238008682310753e-01, -8.82538157518486188e-01},
    {8.53653239547929044e-01, 3.82366216622460620e-01, -3.53655514583261776e-01},
    {9.71074967677126311e-02, 8.68069561462920247e-01, 4.86852514148876314e-01},
    {-5.94283275622996543e-01, -8.03335025122870139e-01, 3.84737017407895676e-02},
    {5.62174837957414519e-01, 7.20924217712029081e-01, 4.05250199116365006e-01},
    {-5.34305637143600798e-01, 6.12542315616052546e-01, 5.82502701878965690e-01},
    {7.36604648689002217e-01, -3.00951818548222449e-01, 6.05674495453019102e-01},
    {8.81460698349169069e-02, 7.86306894158687597e-02, 9.92999237187341954e-01},
    {5.19887233282286254e-01, -8.35031607242967877e-01, -1.80109632100327960e-01},
    {7.39405508854705240e-01, -6.27101730664991308e-01, 2.44995740518660909e-01},
    {7.77256370275925090e-01, 1.92296498692353546e-01, 5.99078117991431625e-01},
    {-8.08970416057658626e-01, 9.13607387144922678e-03, 5.87778357969834020e-01},
    {5.00226899478911524e-01, 6.07029599195985314e-01, -6.17485315402460655e-01},
    {-2.90604241156424525e-01, -3.14236766815324975e-01, 9.03772332727302286e-01},
    {8.93109363854701077e-01, -3.68272187740074586e-01, -2.58323943784137922e-01},
    {9.87019460156144834e-01, -1.19248917649897743e-01, 1.07574536542809865e-01},
    {-9.69755965100682071e-02, 5.77317073050044760e-01, 8.10740853076028167e-01},
    {-2.20415940218309708e-01, -9.24140204201169713e-01, 3.12060404852488260e-01},
    {-9.26177006268958936e-01, -3.55264774091340163e-01, -1.26424259335374184e-01},
    {4.57220046435462324e-01, -1.50614637024091669e-01, -8.76507307585997708e-01},
    {-4.24762006845571138e-01, -3.94204960750843880e-01, -8.14972199808035591e-01},
    {8.68432966935821782e-02, -6.66763216195049857e-01, 7.40192579906488790e-01},
    {-6.30845896813286844e-02, 9.95063091291208401e-01, 7.66144822779776663e-02},
    {3.46222750941705626e-01, -8.42086097113054488e-01, 4.13546625883056851e-01},
    {3.71544413058159217e-01, -2.88238008682310753e-01, 8.82538157518486188e-01},
    {-8.53653239547929044e-01, -3.82366216622460620e-01, 3.53655514583261776e-01},
    {-9.71074967677126311e-02, -8.68069561462920247e-01, -4.86852514148876314e-01},
    {5.94283275622996543e-01, 8.03335025122870139e-01, -3.84737017407895676e-02},
    {-5.62174837957414519e-01, -7.20924217712029081e-01, -4.05250199116365006e-01},
    {5.34305637143600798e-01, -6.12542315616052546e-01, -5.82502701878965690e-01},
    {-7.36604648689002217e-01, 3.00951818548222449e-01, -6.05674495453019102e-01},
    {-8.81460698349169069e-02, -7.86306894158687597e-02, -9.92999237187341954e-01},
    {-5.19887233282286254e-01, 8.35031607242967877e-01, 1.80109632100327960e-01},
    {-7.39405508854705240e-01, 6.27101730664991308e-01, -2.44995740518660909e-01},
    {-7.77256370275925090e-01, -1.92296498692353546e-01, -5.99078117991431625e-01},
    {8.08970416057658626e-01, -9.13607387144922678e-03, -5.87778357969834020e-01},
    {-5.00226899478911524e-01, -6.07029599195985314e-01, 6.17485315402460655e-01},
    {2.90604241156424525e-01, 3.14236766815324975e-01, -9.03772332727302286e-01},
    {-8.93109363854701077e-01, 3.68272187740074586e-01, 2.58323943784137922e-01},
    {-9.87019460156144834e-01, 1.19248917649897743e-01, -1.07574536542809865e-01},
    {9.69755965100682071e-02, -5.77317073050044760e-01, -8.10740853076028167e-01},
    {2.20415940218309708e-01, 9.24140204201169713e-01, -3.12060404852488260e-01},
    {9.26177006268958936e-01, 3.55264774091340163e-01, 1.26424259335374184e-01},
    {-4.57220046435462324e-01, 1.50614637024091669e-01, 8.76507307585997708e-01},
    {4.24762006845571138e-01, 3.94204960750843880e-01, 8.14972199808035591e-01},
    {-8.68432966935821782e-02, 6.66763216195049857e-01, -7.40192579906488790e-01},
    {6.30845896813286844e-02, -9.95063091291208401e-01, -7.66144822779776663e-02},
    {-3.46222750941705626e-01, 8.42086097113054488e-01, -4.13546625883056851e-01},
};

const std::vector<DesignTable>& design_tables() {
  static const std::vector<DesignTable> tables = {
      {6, 3, true, "octahedron vertices, closed form", &kDesign6[0][0]},
      {12, 5, true, "icosahedron vertices, closed form", &kDesign12[0][0]},
      {24, 5, true, "antipodal 5-design, least-squares solve", &kDesign24[0][0]},
      {32, 7, true, "antipodal 7-design, least-squares solve", &kDesign32[0][0]},
      {48, 9, true, "antipodal 9-design, least-squares solve", &kDesign48[0][0]},
  };
  return tables;
}

}  // namespace wavekin::detail
