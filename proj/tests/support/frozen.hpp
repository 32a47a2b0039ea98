#pragma once

// Reference values from an independent dense first-step solve (numpy
// LU on the lattice truncated at 600 barriers), frozen here. Generating
// functions include the m = 0 self-arrival at i0 for players A and C.

struct FrozenProfile
{
    double p;
    double s;
    int i0;
    char strategy;
    double p0;
    double p1;
    double p2;
    double p3;
    double m_total;
    double et0;
    double et1;
    double et2;
};

struct FrozenMgf
{
    double p;
    double s;
    int i0;
    char strategy;
    double z;
    double x0;
    double x1;  //!< state 1
    double x_i0;
    double x_2i0;
    double x_3i0;
};

// p, s, i0, strategy, P(0), P(i0), P(2 i0), P(3 i0), m_total, E[T;0], E[T;i0], E[T;2 i0]
inline constexpr FrozenProfile frozen_profiles[] = {
    {0.4, 0.5, 2, 'A', 0.24306090567001334, 0.6751691824167039, 0.07293654798163848, 0.007879121515049527, 1.513878188659973, 0.6741296603491915, 0.522244025025458, 0.2587060788107801},
    {0.4, 0.5, 2, 'B', 0.4861218113400267, 0.3503383648334077, 0.14587309596327697, 0.015758243030099053, 3.027756377319946, 1.348259320698383, 1.044488050050916, 0.5174121576215602},
    {0.4, 0.5, 2, 'C', 0.7482692297435277, 0.0, 0.22453703292156196, 0.024256077590387767, 4.660512816865877, 3.2783490267824633, 0.0, 1.1574308295258988},
    {0.7, 0.3, 3, 'A', 0.03883489221719859, 0.48697721986645837, 0.2402487330033521, 0.11852598305428767, 6.728155754479604, 0.20306188221748286, 0.8265005978702757, 1.6639764950781395},
    {0.7, 0.3, 3, 'B', 0.05547841745314085, 0.2671103140949405, 0.3432124757190744, 0.16932283293469672, 9.611651077828007, 0.2900884031678327, 1.1807151398146798, 2.377109278683056},
    {0.7, 0.3, 3, 'C', 0.07569818285084677, 0.0, 0.4683003217533821, 0.2310345420205998, 13.114730992507278, 0.5177674089486978, 0.0, 3.997925765511355},
    {0.5, 0.5, 1, 'A', 0.2679491924311227, 0.5358983848622454, 0.14359353944898165, 0.03847577293368119, 0.7320508075688772, 0.30940107675850304, 0.0829037686547607, 0.18802153517006115},
    {0.5, 0.5, 1, 'B', 0.5358983848622454, 0.07179676972449082, 0.2871870788979633, 0.07695154586736239, 1.4641016151377544, 0.6188021535170061, 0.1658075373095214, 0.3760430703401223},
    {0.5, 0.5, 1, 'C', 0.5773502691896257, 0.0, 0.30940107675850304, 0.08290376865476069, 1.5773502691896255, 0.7698003589195009, 0.0, 0.4603992821609979},
    {0.3, 0.9, 5, 'A', 0.043124780413723564, 0.9562785989403609, 0.0005962486473645533, 3.7176660638227997e-07, 0.5315973442145977, 0.3370296412513997, 0.1897836666478987, 0.004778146173456165},
    {0.3, 0.9, 5, 'B', 0.43124780413723574, 0.5627859894036089, 0.005962486473645535, 3.717666063822802e-06, 5.315973442145978, 3.3702964125139983, 1.8978366664789874, 0.04778146173456167},
    {0.3, 0.9, 5, 'C', 0.9863540364339719, 0.0, 0.013637455180158294, 8.503080811046383e-06, 12.15874448967134, 11.990089846016506, 0.0, 0.16848299100124484},
    {0.55, 0.1, 2, 'A', 0.412026665960728, 0.22607773166569445, 0.13915008070577536, 0.08564640496772088, 10.583520012706895, 2.4959855729316733, 0.9173839456846189, 1.4075936052166391},
    {0.55, 0.1, 2, 'B', 0.4578074066230311, 0.14008636851743822, 0.15461120078419485, 0.09516267218635655, 11.759466680785437, 2.773317303257415, 1.0193154952051322, 1.5639928946851542},
    {0.55, 0.1, 2, 'C', 0.5323876606464927, 0.0, 0.17979852292564835, 0.11066538394360409, 13.67517184314332, 3.856187614439095, 0.0, 2.031906753362936},
    {0.5, 0.2, 3, 'A', 0.31385933836549285, 0.47078900754823927, 0.1477615264188374, 0.04637633491769162, 8.23368793961409, 2.5678872023561476, 2.1256044425240104, 1.876073871450414},
    {0.5, 0.2, 3, 'B', 0.39232417295686606, 0.3384862594352991, 0.18470190802354677, 0.057970418647114524, 10.29210992451761, 3.209859002945184, 2.6570055531550127, 2.3450923393130174},
    {0.5, 0.2, 3, 'C', 0.5930703308172537, 0.0, 0.2792109924517609, 0.08763297735528229, 15.558421984903527, 7.2343926843497455, 0.0, 4.6665054819936},
};

// p, s, i0, strategy, z, X(0), X(1), X(i0), X(2 i0), X(3 i0)
inline constexpr FrozenMgf frozen_mgfs[] = {
    {0.4, 0.5, 2, 'A', 0.3, 0.016559663125090225, 0.09199812847272348, 1.0222014274747053, 0.007523249459985541, 5.536998962816779e-05},
    {0.4, 0.5, 2, 'A', 0.5, 0.047921200882852226, 0.1597373362761741, 1.0649155751744939, 0.022680903644984467, 0.00048306495101151835},
    {0.4, 0.5, 2, 'A', 0.9, 0.18369744268763472, 0.34018044942154574, 1.2599275904501694, 0.10286465614990654, 0.008398210790080315},
    {0.4, 0.5, 2, 'B', 0.3, 0.03311932625018045, 0.18399625694544697, 0.0444028549494108, 0.015046498919971082, 0.00011073997925633558},
    {0.4, 0.5, 2, 'B', 0.5, 0.09584240176570445, 0.3194746725523482, 0.12983115034898787, 0.045361807289968935, 0.0009661299020230367},
    {0.4, 0.5, 2, 'B', 0.9, 0.36739488537526943, 0.6803608988430915, 0.5198551809003387, 0.2057293122998131, 0.01679642158016063},
    {0.4, 0.5, 2, 'C', 0.3, 0.03387131785705659, 0.18817398809475883, 1.0454110449708824, 0.015388137539525655, 0.00011325438834537764},
    {0.4, 0.5, 2, 'C', 0.5, 0.10249598776451589, 0.34165329254838633, 1.1388443084946211, 0.04851092167258993, 0.0010332007211042188},
    {0.4, 0.5, 2, 'C', 0.9, 0.4964309986893681, 0.9193166642395705, 1.7024382671103155, 0.2779853831126519, 0.0226956462143718},
    {0.7, 0.3, 3, 'A', 0.3, 0.0005345489947872848, 0.005939433275414275, 1.027720985274946, 0.00697899838233253, 4.739264753611085e-05},
    {0.7, 0.3, 3, 'A', 0.5, 0.002703340197708627, 0.01802226798472418, 1.0841967565413433, 0.037233954342405534, 0.0012787045779355949},
    {0.7, 0.3, 3, 'A', 0.9, 0.023445851317410848, 0.0868364863607809, 1.4122202631944352, 0.42062860248792544, 0.12528387096693686},
    {0.7, 0.3, 3, 'B', 0.3, 0.0007636414211246928, 0.008484904679163251, 0.03960140753563722, 0.009969997689046476, 6.77037821944441e-05},
    {0.7, 0.3, 3, 'B', 0.5, 0.003861914568155182, 0.025746097121034543, 0.12028108077334741, 0.05319136334629362, 0.0018267208256222782},
    {0.7, 0.3, 3, 'B', 0.9, 0.03349407331058693, 0.12405212337254415, 0.5888860902777646, 0.6008980035541794, 0.17897695852419557},
    {0.7, 0.3, 3, 'C', 0.3, 0.000772822883311154, 0.008586920925679488, 1.0400775457017462, 0.010089869600455194, 6.851780262196776e-05},
    {0.7, 0.3, 3, 'C', 0.5, 0.004006485904566514, 0.026709906030443428, 1.1247838206153395, 0.05518258980892038, 0.0018951043867679053},
    {0.7, 0.3, 3, 'C', 0.9, 0.040681019217183464, 0.1506704415451239, 1.715245534133035, 0.7298348876076545, 0.21738069961333892},
    {0.5, 0.5, 1, 'A', 0.3, 0.07542668890493716, 1.005689185399162, 1.005689185399162, 0.07585580532216227, 0.005721552229668209},
    {0.5, 0.5, 1, 'A', 0.5, 0.12701665379258312, 1.016133230340665, 1.016133230340665, 0.12906584272531935, 0.01639351146188987},
    {0.5, 0.5, 1, 'A', 0.9, 0.23771432227869427, 1.0565080990164188, 1.0565080990164188, 0.25114710673963964, 0.059701264270868325},
    {0.5, 0.5, 1, 'B', 0.3, 0.15085337780987432, 0.01137837079832434, 0.01137837079832434, 0.15171161064432453, 0.011443104459336419},
    {0.5, 0.5, 1, 'B', 0.5, 0.25403330758516623, 0.03226646068132984, 0.03226646068132984, 0.2581316854506387, 0.03278702292377974},
    {0.5, 0.5, 1, 'B', 0.9, 0.47542864455738854, 0.11301619803283784, 0.11301619803283784, 0.5022942134792793, 0.11940252854173665},
    {0.5, 0.5, 1, 'C', 0.3, 0.15171652122725207, 1.0114434748483472, 1.0114434748483472, 0.15257966464462983, 0.011508578898370134},
    {0.5, 0.5, 1, 'C', 0.5, 0.25819888974716115, 1.0327955589886446, 1.0327955589886446, 0.26236447190915607, 0.03332465729595917},
    {0.5, 0.5, 1, 'C', 0.9, 0.5039032598602688, 1.1197850219117087, 1.1197850219117087, 0.5323778751631493, 0.12655384579057932},
    {0.3, 0.9, 5, 'A', 0.3, 4.344695423193221e-05, 0.00020689025824729623, 1.0038691896577205, 6.305979218963004e-07, 3.9612107154669916e-13},
    {0.3, 0.9, 5, 'A', 0.5, 0.0006283582638792395, 0.0017953093253692558, 1.0112429340785656, 9.187109753288194e-06, 8.34645986385756e-11},
    {0.3, 0.9, 5, 'A', 0.9, 0.020001351410970064, 0.031748176842809624, 1.0452437650404578, 0.0003022685755156785, 8.741146783185163e-08},
    {0.3, 0.9, 5, 'B', 0.3, 0.00043446954231932214, 0.0020689025824729627, 0.03869189657720503, 6.305979218963006e-06, 3.961210715466992e-12},
    {0.3, 0.9, 5, 'B', 0.5, 0.006283582638792396, 0.01795309325369256, 0.11242934078565667, 9.187109753288196e-05, 8.346459863857563e-10},
    {0.3, 0.9, 5, 'B', 0.9, 0.20001351410970067, 0.3174817684280963, 0.4524376504045792, 0.003022685755156786, 8.741146783185166e-07},
    {0.3, 0.9, 5, 'C', 0.3, 0.00045014480286066844, 0.0021435466802888973, 1.040087864534933, 6.533493135583911e-06, 4.104127546167362e-12},
    {0.3, 0.9, 5, 'C', 0.5, 0.00699097419718782, 0.019974211991965203, 1.1250863823429267, 0.00010221373844191812, 9.286085486623908e-10},
    {0.3, 0.9, 5, 'C', 0.9, 0.33740123317141496, 0.5355575129704999, 1.763213535141218, 0.005098944967889579, 1.4745372167009898e-06},
    {0.55, 0.1, 2, 'A', 0.3, 0.017095088222915972, 0.1266302831327109, 1.0422245525326004, 0.02661540001863834, 0.0006796803207435244},
    {0.55, 0.1, 2, 'A', 0.5, 0.0514759887188409, 0.22878217208373736, 1.1297885041172215, 0.08687647673341141, 0.0066804735418230805},
    {0.55, 0.1, 2, 'A', 0.9, 0.2530649036915856, 0.6248516140532977, 1.7142705460995822, 0.6480546541808831, 0.24498748797910436},
    {0.55, 0.1, 2, 'B', 0.3, 0.018994542469906634, 0.14070031459190102, 0.04691616948066703, 0.029572666687375935, 0.0007552003563816937},
    {0.55, 0.1, 2, 'B', 0.5, 0.05719554302093433, 0.25420241342637484, 0.14420944901913513, 0.09652941859267936, 0.007422748379803424},
    {0.55, 0.1, 2, 'B', 0.9, 0.2811832263239839, 0.6942795711703307, 0.7936339401106468, 0.7200607268676479, 0.2722083199767826},
    {0.55, 0.1, 2, 'C', 0.3, 0.019084077652057246, 0.14136353816338704, 1.047137319728793, 0.029712064311863524, 0.0007587601684474999},
    {0.55, 0.1, 2, 'C', 0.5, 0.05803242543059332, 0.257921890802637, 1.1463195146783869, 0.09794183236074613, 0.007531357673854685},
    {0.55, 0.1, 2, 'C', 0.9, 0.3054226005079829, 0.7541298777974887, 1.8620490809814538, 0.782133495652357, 0.29567401318393166},
    {0.5, 0.2, 3, 'A', 0.3, 0.0028677877911400954, 0.019118585274267304, 1.0382453947553496, 0.002977467467286821, 8.53874485120197e-06},
    {0.5, 0.2, 3, 'A', 0.5, 0.014928699493560734, 0.059714797974242936, 1.119652462017055, 0.01671495514267804, 0.000249532542373388},
    {0.5, 0.2, 3, 'A', 0.9, 0.15779327678272836, 0.3506517261838408, 1.7262021705655124, 0.27238309688299045, 0.04298022139739443},
    {0.5, 0.2, 3, 'B', 0.3, 0.0035847347389251195, 0.02389823159283413, 0.04780674344418703, 0.003721834334108526, 1.0673431064002458e-05},
    {0.5, 0.2, 3, 'B', 0.5, 0.018660874366950915, 0.07464349746780366, 0.14956557752131863, 0.020893693928347543, 0.00031191567796673496},
    {0.5, 0.2, 3, 'B', 0.9, 0.19724159597841043, 0.43831465772980094, 0.9077527132068905, 0.34047887110373803, 0.05372527674674304},
    {0.5, 0.2, 3, 'C', 0.3, 0.0036193405156185856, 0.02412893677079057, 1.048268253042124, 0.0037577636223924487, 1.0776468638287449e-05},
    {0.5, 0.2, 3, 'C', 0.5, 0.01923629178498901, 0.07694516713995604, 1.1541775070993405, 0.021537961457141395, 0.0003215337542975574},
    {0.5, 0.2, 3, 'C', 0.9, 0.24099422903274603, 0.5355427311838801, 2.109112731452565, 0.4160047612500886, 0.06564275443486806},
};
