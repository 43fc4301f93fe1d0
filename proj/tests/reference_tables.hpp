// Generated by tests/tools/make_reference_tables.py (mpmath, 50 digits).
// Do not edit by hand; regenerate instead.
#pragma once

namespace reftab {

struct GammaRef { double x; double value; };
inline constexpr GammaRef kGamma[] = {
    {0.0010000000000000000, 999.42377248459545},
    {0.010000000000000000, 99.432585119150602},
    {0.10000000000000001, 9.5135076986687313},
    {0.25000000000000000, 3.6256099082219083},
    {0.50000000000000000, 1.7724538509055160},
    {0.75000000000000000, 1.2254167024651776},
    {1.0000000000000000, 1.0000000000000000},
    {1.2500000000000000, 0.90640247705547708},
    {1.5000000000000000, 0.88622692545275801},
    {2.5000000000000000, 1.3293403881791370},
    {3.7000000000000002, 4.1706517837966040},
    {7.2999999999999998, 1271.4236336639088},
    {12.600000000000000, 175523299.46855589},
    {25.399999999999999, 2.2376616290771108e+24},
    {50.000000000000000, 6.0828186403426756e+62},
    {123.45600000000000, 8.8531493293192149e+203},
    {170.00000000000000, 4.2690680090047053e+304},
};

struct BesselRef { double nu; double z; double value; double scaled; };
inline constexpr BesselRef kBesselI[] = {
    {-0.50000000000000000, 0.0010000000000000000, 25.231337835865262, 25.206119109494142},
    {-0.50000000000000000, 0.10000000000000001, 2.5357587011874124, 2.2944493559446366},
    {-0.50000000000000000, 0.50000000000000000, 1.2723896474148494, 0.77174333225805364},
    {-0.50000000000000000, 1.0000000000000000, 1.2312002145929674, 0.45293324691462073},
    {-0.50000000000000000, 2.0000000000000000, 2.1225916201776372, 0.28726153811240116},
    {-0.50000000000000000, 5.0000000000000000, 26.479951764305951, 0.17842051152623320},
    {-0.50000000000000000, 8.0000000000000000, 420.45640863673772, 0.14104741175973241},
    {-0.50000000000000000, 11.900000000000000, 17031.030229095697, 0.11564758954227651},
    {-0.50000000000000000, 12.100000000000000, 20629.115702854412, 0.11468784191355207},
    {-0.50000000000000000, 15.000000000000000, 336729.88718712710, 0.10300645387286019},
    {-0.50000000000000000, 20.000000000000000, 43279746.272428928, 0.089206205807638556},
    {-0.50000000000000000, 35.000000000000000, 106950522408567.55, 0.067433553134473544},
    {-0.50000000000000000, 50.000000000000000, 2.9251568529912900e+20, 0.056418958354775629},
    {-0.25000000000000000, 0.0010000000000000000, 5.4572499831654316, 5.4517954608979434},
    {-0.25000000000000000, 0.10000000000000001, 1.7314899503134447, 1.5667168959968292},
    {-0.25000000000000000, 0.50000000000000000, 1.2519701939928325, 0.75935830770302635},
    {-0.25000000000000000, 1.0000000000000000, 1.3177528951478926, 0.48477419866905696},
    {-0.25000000000000000, 2.0000000000000000, 2.2552929242585873, 0.30522070668606441},
    {-0.25000000000000000, 5.0000000000000000, 27.048132317515847, 0.18224888197967254},
    {-0.25000000000000000, 8.0000000000000000, 425.77537085247924, 0.14283172480233923},
    {-0.25000000000000000, 11.900000000000000, 17171.987023344307, 0.11660474323557507},
    {-0.25000000000000000, 12.100000000000000, 20796.882364222390, 0.11562054288893478},
    {-0.25000000000000000, 15.000000000000000, 338917.07607311473, 0.10367552002845961},
    {-0.25000000000000000, 20.000000000000000, 43488477.762579141, 0.089636433474678665},
    {-0.25000000000000000, 35.000000000000000, 107241611172837.87, 0.067617087999102666},
    {-0.25000000000000000, 50.000000000000000, 2.9307027872246365e+20, 0.056525925552869478},
    {0.0, 0.0010000000000000000, 1.0000002500000156, 0.99900074958351556},
    {0.0, 0.10000000000000001, 1.0025015629340956, 0.90710092578230109},
    {0.0, 0.50000000000000000, 1.0634833707413235, 0.64503527044915007},
    {0.0, 1.0000000000000000, 1.2660658777520083, 0.46575960759364044},
    {0.0, 2.0000000000000000, 2.2795853023360673, 0.30850832255367104},
    {0.0, 5.0000000000000000, 27.239871823604447, 0.18354081260932835},
    {0.0, 8.0000000000000000, 427.56411572180479, 0.14343178185685031},
    {0.0, 11.900000000000000, 17219.240276268027, 0.11692561195139262},
    {0.0, 12.100000000000000, 20853.117403880697, 0.11593318233655986},
    {0.0, 15.000000000000000, 339649.37329791388, 0.10389953144882272},
    {0.0, 20.000000000000000, 43558282.559553533, 0.089780311884826022},
    {0.0, 35.000000000000000, 107338818494514.06, 0.067678378350413626},
    {0.0, 50.000000000000000, 2.9325537838493363e+20, 0.056561626647454193},
    {0.25000000000000000, 0.0010000000000000000, 0.16497627909720169, 0.16481138527875487},
    {0.25000000000000000, 0.10000000000000001, 0.52274467871774868, 0.47299894538300494},
    {0.25000000000000000, 0.50000000000000000, 0.81967596598872946, 0.49715860440173416},
    {0.25000000000000000, 1.0000000000000000, 1.1238518716709460, 0.41344199850978711},
    {0.25000000000000000, 2.0000000000000000, 2.2033544516736299, 0.29819159878790215},
    {0.25000000000000000, 5.0000000000000000, 27.046461194155766, 0.18223762203904338},
    {0.25000000000000000, 8.0000000000000000, 425.77530467377249, 0.14283170260185635},
    {0.25000000000000000, 11.900000000000000, 17171.987022242112, 0.11660474322809072},
    {0.25000000000000000, 12.100000000000000, 20796.882363327370, 0.11562054288395890},
    {0.25000000000000000, 15.000000000000000, 338917.07607307043, 0.10367552002844606},
    {0.25000000000000000, 20.000000000000000, 43488477.762579141, 0.089636433474678665},
    {0.25000000000000000, 35.000000000000000, 107241611172837.87, 0.067617087999102666},
    {0.25000000000000000, 50.000000000000000, 2.9307027872246365e+20, 0.056525925552869478},
    {0.50000000000000000, 0.0010000000000000000, 0.025231329425422681, 0.025206110707457801},
    {0.50000000000000000, 0.10000000000000001, 0.25273398460013198, 0.22868316607552339},
    {0.50000000000000000, 0.50000000000000000, 0.58799308679041633, 0.35663583483745894},
    {0.50000000000000000, 1.0000000000000000, 0.93767488824548765, 0.34495131388824463},
    {0.50000000000000000, 2.0000000000000000, 2.0462368630890550, 0.27692804543535513},
    {0.50000000000000000, 5.0000000000000000, 26.477547497559065, 0.17840431170432102},
    {0.50000000000000000, 8.0000000000000000, 420.45631400447756, 0.14104738001414573},
    {0.50000000000000000, 11.900000000000000, 17031.030227525109, 0.11564758953161158},
    {0.50000000000000000, 12.100000000000000, 20629.115701579195, 0.11468784190646248},
    {0.50000000000000000, 15.000000000000000, 336729.88718706408, 0.10300645387284092},
    {0.50000000000000000, 20.000000000000000, 43279746.272428928, 0.089206205807638555},
    {0.50000000000000000, 35.000000000000000, 106950522408567.55, 0.067433553134473544},
    {0.50000000000000000, 50.000000000000000, 2.9251568529912900e+20, 0.056418958354775629},
    {1.0000000000000000, 0.0010000000000000000, 0.00050000006250000261, 0.00049950031235422135},
    {1.0000000000000000, 0.10000000000000001, 0.050062526047092695, 0.045298446808809327},
    {1.0000000000000000, 0.50000000000000000, 0.25789430539089632, 0.15642080318487170},
    {1.0000000000000000, 1.0000000000000000, 0.56515910399248503, 0.20791041534970845},
    {1.0000000000000000, 2.0000000000000000, 1.5906368546373291, 0.21526928924893766},
    {1.0000000000000000, 5.0000000000000000, 24.335642142450527, 0.16397226694454236},
    {1.0000000000000000, 8.0000000000000000, 399.87313678256010, 0.13414249329269818},
    {1.0000000000000000, 11.900000000000000, 16479.060192397504, 0.11189948955155167},
    {1.0000000000000000, 12.100000000000000, 19971.911047960127, 0.11103410393219317},
    {1.0000000000000000, 15.000000000000000, 328124.92197020640, 0.10037417504516666},
    {1.0000000000000000, 20.000000000000000, 42454973.385127770, 0.087506222183288665},
    {1.0000000000000000, 35.000000000000000, 105794126051896.27, 0.066704431729491439},
    {1.0000000000000000, 50.000000000000000, 2.9030785901035568e+20, 0.055993123892895400},
    {1.5000000000000000, 0.0010000000000000000, 8.4104425811114045e-6, 8.4020363423501936e-6},
    {1.5000000000000000, 0.10000000000000001, 0.0084188551860927703, 0.0076176951894028302},
    {1.5000000000000000, 0.50000000000000000, 0.096403473834016741, 0.058471662583135768},
    {1.5000000000000000, 1.0000000000000000, 0.29352532634747980, 0.10798193302637610},
    {1.5000000000000000, 2.0000000000000000, 1.0994731886331097, 0.14879751539472359},
    {1.5000000000000000, 5.0000000000000000, 21.184442264794138, 0.14273964918536900},
    {1.5000000000000000, 8.0000000000000000, 367.89936938617803, 0.12341648925796420},
    {1.5000000000000000, 11.900000000000000, 15599.851218379302, 0.10592930470768730},
    {1.5000000000000000, 12.100000000000000, 18924.230107682578, 0.10520950787169567},
    {1.5000000000000000, 15.000000000000000, 314281.22804132282, 0.096139356948004133},
    {1.5000000000000000, 20.000000000000000, 41115758.958807482, 0.084745895517256628},
    {1.5000000000000000, 35.000000000000000, 103894793196894.19, 0.065506880187774300},
    {1.5000000000000000, 50.000000000000000, 2.8666537159314642e+20, 0.055290579187680116},
    {2.5000000000000000, 0.0010000000000000000, 1.6820884681626112e-9, 1.6804072204584046e-9},
    {2.5000000000000000, 0.10000000000000001, 0.00016832901734888535, 0.00015231039343849567},
    {2.5000000000000000, 0.50000000000000000, 0.0095722437863158803, 0.0058058593386443269},
    {2.5000000000000000, 1.0000000000000000, 0.057098909203048247, 0.021005514809116314},
    {2.5000000000000000, 2.0000000000000000, 0.39702708013939052, 0.053731772343269742},
    {2.5000000000000000, 5.0000000000000000, 13.766882138682583, 0.092760522193099625},
    {2.5000000000000000, 8.0000000000000000, 282.49405048466080, 0.094766196542409159},
    {2.5000000000000000, 11.900000000000000, 13098.294626253017, 0.088942722798581171},
    {2.5000000000000000, 12.100000000000000, 15937.157823641366, 0.088602839954802400},
    {2.5000000000000000, 15.000000000000000, 273873.64157879951, 0.083778582483240089},
    {2.5000000000000000, 20.000000000000000, 37112382.428607806, 0.076494321480050061},
    {2.5000000000000000, 35.000000000000000, 98045254420262.337, 0.061818677689807175},
    {2.5000000000000000, 50.000000000000000, 2.7531576300354022e+20, 0.053101523603514822},
    {3.5000000000000000, 0.0010000000000000000, 2.4029834878039928e-13, 2.4005817054075355e-13},
    {3.5000000000000000, 0.10000000000000001, 2.4043186485031972e-6, 2.1755174780473408e-6},
    {3.5000000000000000, 0.50000000000000000, 0.00068103597085793816, 0.00041306919669249902},
    {3.5000000000000000, 1.0000000000000000, 0.0080307803322385630, 0.0029543589807945325},
    {3.5000000000000000, 2.0000000000000000, 0.10690548828463337, 0.014468084536549237},
    {3.5000000000000000, 5.0000000000000000, 7.4175601261115551, 0.049979126992269371},
    {3.5000000000000000, 8.0000000000000000, 191.34058783326503, 0.064187616418958471},
    {3.5000000000000000, 11.900000000000000, 10096.366081298202, 0.068558412775510340},
    {3.5000000000000000, 12.100000000000000, 12338.627701219204, 0.068596764088719467},
    {3.5000000000000000, 15.000000000000000, 222990.01418172299, 0.068213162786924103},
    {3.5000000000000000, 20.000000000000000, 31837663.351655531, 0.065622315147244113},
    {3.5000000000000000, 35.000000000000000, 89888328279713.861, 0.056675640517801846},
    {3.5000000000000000, 50.000000000000000, 2.5913379529279240e+20, 0.049980426827328634},
};

struct BesselScaledRef { double nu; double z; double scaled; };
inline constexpr BesselScaledRef kBesselIScaledLarge[] = {
    {-0.50000000000000000, 100.00000000000000, 0.039894228040143268},
    {-0.50000000000000000, 500.00000000000000, 0.017841241161527711},
    {-0.50000000000000000, 1000.0000000000000, 0.012615662610100800},
    {0.0, 100.00000000000000, 0.039944379299096683},
    {0.0, 500.00000000000000, 0.017845706500153167},
    {0.0, 1000.0000000000000, 0.012617240455891257},
    {0.50000000000000000, 100.00000000000000, 0.039894228040143268},
    {0.50000000000000000, 500.00000000000000, 0.017841241161527711},
    {0.50000000000000000, 1000.0000000000000, 0.012615662610100800},
    {1.5000000000000000, 100.00000000000000, 0.039495285759741835},
    {1.5000000000000000, 500.00000000000000, 0.017805558679204656},
    {1.5000000000000000, 1000.0000000000000, 0.012603046947490699},
    {3.5000000000000000, 100.00000000000000, 0.037559817286374284},
    {3.5000000000000000, 500.00000000000000, 0.017628214601110131},
    {3.5000000000000000, 1000.0000000000000, 0.012540157680144408},
};

struct CouplingRef { double sigma; double alpha; double value; };
inline constexpr CouplingRef kCoupling[] = {
    {0.20000000000000001, 1.5000000000000000, -0.059596300829600876},
    {1.1000000000000001, 1.5000000000000000, 0.85782161115808694},
    {-0.25000000000000000, 0.50000000000000000, -0.079046517084692317},
    {0.10000000000000001, 0.50000000000000000, 0.093991080729229941},
    {-0.50000000000000000, 0.80000000000000004, 0.19597928317252056},
    {0.25000000000000000, 1.0000000000000000, 0.068309886183790672},
    {0.75000000000000000, 1.8999999999999999, -0.11254992690008241},
    {0.50000000000000000, 1.9900000000000000, -0.24491081379543220},
    {1.8999999999999999, 1.9900000000000000, 1.8207024469165917},
};

struct LambdaStarRef { double alpha; double value; };
inline constexpr LambdaStarRef kLambdaStar[] = {
    {0.29999999999999999, -0.17809870233547159},
    {0.50000000000000000, -0.079046517084692317},
    {0.80000000000000004, -0.011051415991394587},
    {1.0000000000000000, 0.0},
    {1.3000000000000000, -0.022572351435860387},
    {1.5000000000000000, -0.062041264812559073},
    {1.8999999999999999, -0.20179024685802928},
    {1.9900000000000000, -0.24493577926033007},
    {2.0000000000000000, -0.25000000000000000},
};

struct SigmaRef { double lambda; double alpha; double sigma; };
inline constexpr SigmaRef kSigmaFromLambda[] = {
    {1.0000000000000000, 1.5000000000000000, 1.1427723950989323},
    {0.50000000000000000, 1.5000000000000000, 0.95221133473216950},
    {1.0000000000000000, 0.80000000000000004, 0.58262165849951234},
    {2.0000000000000000, 0.50000000000000000, 0.41592186822823226},
    {5.0000000000000000, 1.8999999999999999, 1.8728993128861915},
};

struct FracConstRef { double alpha; double value; };
inline constexpr FracConstRef kFracConstant[] = {
    {0.29999999999999999, 0.064846594521430725},
    {0.50000000000000000, 0.099735570100358169},
    {1.0000000000000000, 0.15915494309189534},
    {1.5000000000000000, 0.14960335515053725},
    {1.8999999999999999, 0.045496241237597285},
};

struct SchurScalarRef { double beta; double p; double r; double alpha; double value; };
inline constexpr SchurScalarRef kSchurScalar[] = {
    {1.0000000000000000, 2.0000000000000000, 0.0, 2.0000000000000000, 9.9972912484290514},
    {0.80000000000000004, 2.0000000000000000, 0.25000000000000000, 1.5000000000000000, 15.021180891657785},
    {1.2000000000000000, 3.0000000000000000, 0.10000000000000001, 1.0000000000000000, 8.6733897673520171},
};

// Kernel-composition integral at s=1, t=2, |x-y|=5, N=1, beta=1.
inline constexpr double kCompositionPaired  = 0.10311446815008121;
inline constexpr double kCompositionLiteral = 0.18181157984061276;

}  // namespace reftab
