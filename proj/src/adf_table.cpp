// Generated by tools/gen_adf_table.cpp; do not edit by hand.
// Regenerate with: gen_adf_table --out-data data/adf_quantiles.txt --out-src src/adf_table.cpp
#include "chronofit/adf.hpp"

namespace chronofit::adf_table {

const std::vector<Row>& rows(RegressionKind kind) {
  static const std::vector<Row> kConstant = {
    {0.001, -4.0808929579808595},
    {0.0025000000000000001, -3.8292297898891801},
    {0.0050000000000000001, -3.6294833050277608},
    {0.0074999999999999997, -3.5054313876591681},
    {0.01, -3.4105024927318732},
    {0.014999999999999999, -3.2791106519161728},
    {0.02, -3.1801672882772007},
    {0.025000000000000001, -3.1014495683985479},
    {0.029999999999999999, -3.0343072466268137},
    {0.035000000000000003, -2.9762561054668728},
    {0.040000000000000001, -2.9212088752616663},
    {0.044999999999999998, -2.8709296767345402},
    {0.050000000000000003, -2.8309492003778138},
    {0.055, -2.7936089518293414},
    {0.059999999999999998, -2.756858863370506},
    {0.065000000000000002, -2.7225490111628403},
    {0.070000000000000007, -2.6915844834384237},
    {0.074999999999999997, -2.6626395000109766},
    {0.080000000000000002, -2.634656747495447},
    {0.085000000000000006, -2.6075756976623032},
    {0.089999999999999997, -2.5824405719278198},
    {0.095000000000000001, -2.5572698615717182},
    {0.10000000000000001, -2.5352721200181128},
    {0.105, -2.5133370375941193},
    {0.11, -2.4902955893894529},
    {0.115, -2.4700300516541835},
    {0.12, -2.4489518910715873},
    {0.125, -2.4289404932120862},
    {0.13, -2.4094545290135634},
    {0.13500000000000001, -2.390179382802569},
    {0.14000000000000001, -2.3718571960827761},
    {0.14499999999999999, -2.3550132720954675},
    {0.14999999999999999, -2.3378939102383529},
    {0.155, -2.3217363464645828},
    {0.16, -2.3046850444902405},
    {0.16500000000000001, -2.2886976451519994},
    {0.17000000000000001, -2.2725899250085533},
    {0.17499999999999999, -2.2573586182506196},
    {0.17999999999999999, -2.2428913956747776},
    {0.185, -2.2276808448058785},
    {0.19, -2.2126068965393575},
    {0.19500000000000001, -2.1985834633596193},
    {0.20000000000000001, -2.184020617662056},
    {0.20499999999999999, -2.1695912032412088},
    {0.20999999999999999, -2.1565305289955154},
    {0.215, -2.1428588582225245},
    {0.22, -2.1302523824042803},
    {0.22500000000000001, -2.1164929331854143},
    {0.23000000000000001, -2.1033438818615555},
    {0.23499999999999999, -2.0908469741340725},
    {0.23999999999999999, -2.0792266447661141},
    {0.245, -2.0671279553038238},
    {0.25, -2.0545486613843793},
    {0.255, -2.0422780010623045},
    {0.26000000000000001, -2.0302305557971052},
    {0.26500000000000001, -2.018545094028378},
    {0.27000000000000002, -2.0066289074345205},
    {0.27500000000000002, -1.9952471164466545},
    {0.28000000000000003, -1.9831597779572099},
    {0.28499999999999998, -1.971650939621219},
    {0.28999999999999998, -1.9600904703732811},
    {0.29499999999999998, -1.9488254097669455},
    {0.29999999999999999, -1.9381226795740718},
    {0.30499999999999999, -1.9274518244598076},
    {0.31, -1.9168224605304034},
    {0.315, -1.9063811584777008},
    {0.32000000000000001, -1.8956027014261334},
    {0.32500000000000001, -1.8844066001872239},
    {0.33000000000000002, -1.8738213394651921},
    {0.33500000000000002, -1.8623194951992241},
    {0.34000000000000002, -1.8522224128833877},
    {0.34499999999999997, -1.841852009256886},
    {0.34999999999999998, -1.8310084262134123},
    {0.35499999999999998, -1.8209637823919183},
    {0.35999999999999999, -1.8108402644822825},
    {0.36499999999999999, -1.8007748277085138},
    {0.37, -1.789876742809533},
    {0.375, -1.7801875053006371},
    {0.38, -1.7699367288114283},
    {0.38500000000000001, -1.7590729234813438},
    {0.39000000000000001, -1.7486287657548398},
    {0.39500000000000002, -1.7385947683873741},
    {0.40000000000000002, -1.7288066112835936},
    {0.40500000000000003, -1.7186891012171353},
    {0.40999999999999998, -1.7097711056230969},
    {0.41499999999999998, -1.699905778560064},
    {0.41999999999999998, -1.6899880439801485},
    {0.42499999999999999, -1.6799093773096452},
    {0.42999999999999999, -1.6698208354705044},
    {0.435, -1.6601410410233741},
    {0.44, -1.6500144664633831},
    {0.44500000000000001, -1.6409147824282777},
    {0.45000000000000001, -1.6316865618304002},
    {0.45500000000000002, -1.6218323408567752},
    {0.46000000000000002, -1.6130131727756596},
    {0.46500000000000002, -1.6036013310810249},
    {0.46999999999999997, -1.5933711411221649},
    {0.47499999999999998, -1.5839178563349885},
    {0.47999999999999998, -1.574342069035529},
    {0.48499999999999999, -1.5643600949919123},
    {0.48999999999999999, -1.554867397911921},
    {0.495, -1.5450434294708653},
    {0.5, -1.535796982290224},
    {0.505, -1.526049610067298},
    {0.51000000000000001, -1.5162998521642039},
    {0.51500000000000001, -1.505814844245011},
    {0.52000000000000002, -1.4961015383122622},
    {0.52500000000000002, -1.4861065065555685},
    {0.53000000000000003, -1.4761449692263646},
    {0.53500000000000003, -1.4658915618780499},
    {0.54000000000000004, -1.4554368178410002},
    {0.54500000000000004, -1.4455254391218659},
    {0.55000000000000004, -1.4352801766923378},
    {0.55500000000000005, -1.4248107097241745},
    {0.56000000000000005, -1.4148042355449211},
    {0.56499999999999995, -1.404767860047873},
    {0.56999999999999995, -1.394631248825168},
    {0.57499999999999996, -1.3841631897701596},
    {0.57999999999999996, -1.3730129880979434},
    {0.58499999999999996, -1.362075737928456},
    {0.58999999999999997, -1.3512119594979377},
    {0.59499999999999997, -1.340702134542366},
    {0.59999999999999998, -1.329635453287056},
    {0.60499999999999998, -1.3182868514781703},
    {0.60999999999999999, -1.3075365410979884},
    {0.61499999999999999, -1.2972449730912343},
    {0.62, -1.2867379367576603},
    {0.625, -1.2750954001129764},
    {0.63, -1.2639817963418121},
    {0.63500000000000001, -1.2525472420346289},
    {0.64000000000000001, -1.24107309428073},
    {0.64500000000000002, -1.2295769228405524},
    {0.65000000000000002, -1.2181412026515781},
    {0.65500000000000003, -1.2068816141483176},
    {0.66000000000000003, -1.1953503095355436},
    {0.66500000000000004, -1.1834559201910375},
    {0.67000000000000004, -1.1706839516915548},
    {0.67500000000000004, -1.1580039750027071},
    {0.68000000000000005, -1.1451801876937102},
    {0.68500000000000005, -1.1327415724086687},
    {0.68999999999999995, -1.1201177974525265},
    {0.69499999999999995, -1.1073921005714378},
    {0.69999999999999996, -1.094098239770908},
    {0.70499999999999996, -1.0805065669064304},
    {0.70999999999999996, -1.0668160851163291},
    {0.71499999999999997, -1.0535414890520136},
    {0.71999999999999997, -1.0389728279445611},
    {0.72499999999999998, -1.0243292272029896},
    {0.72999999999999998, -1.0095408653830344},
    {0.73499999999999999, -0.99511458216241577},
    {0.73999999999999999, -0.97956223121028385},
    {0.745, -0.96544787163271029},
    {0.75, -0.94917270269429355},
    {0.755, -0.93324994588939014},
    {0.76000000000000001, -0.91606347368807262},
    {0.76500000000000001, -0.89967347857051694},
    {0.77000000000000002, -0.88315559285971668},
    {0.77500000000000002, -0.86737666716519324},
    {0.78000000000000003, -0.85017533087440755},
    {0.78500000000000003, -0.83265643070055817},
    {0.79000000000000004, -0.81489411988640659},
    {0.79500000000000004, -0.79658469086845629},
    {0.80000000000000004, -0.77800256080818708},
    {0.80500000000000005, -0.75883660421447019},
    {0.81000000000000005, -0.73790749328780947},
    {0.81499999999999995, -0.71904608059291542},
    {0.81999999999999995, -0.6985456925450797},
    {0.82499999999999996, -0.67872413295101586},
    {0.82999999999999996, -0.65783474325663438},
    {0.83499999999999996, -0.63712688697395836},
    {0.83999999999999997, -0.61442644405199909},
    {0.84499999999999997, -0.59114812226461722},
    {0.84999999999999998, -0.56909042557112111},
    {0.85499999999999998, -0.54450920193557117},
    {0.85999999999999999, -0.52041963016069737},
    {0.86499999999999999, -0.49647053390828411},
    {0.87, -0.47187687559446567},
    {0.875, -0.44469598564598367},
    {0.88, -0.41834697876144067},
    {0.88500000000000001, -0.39082744313513912},
    {0.89000000000000001, -0.36296134527504004},
    {0.89500000000000002, -0.33295708498084553},
    {0.90000000000000002, -0.30222522649205824},
    {0.90500000000000003, -0.27057486742631531},
    {0.91000000000000003, -0.23532195216796595},
    {0.91500000000000004, -0.20059657269291256},
    {0.92000000000000004, -0.16368406233310437},
    {0.92500000000000004, -0.12473119426670953},
    {0.93000000000000005, -0.085398612114565842},
    {0.93500000000000005, -0.04215314965064372},
    {0.93999999999999995, 0.0050912941253676057},
    {0.94499999999999995, 0.052696532855377565},
    {0.94999999999999996, 0.10312731755192546},
    {0.95499999999999996, 0.15898597648138213},
    {0.95999999999999996, 0.22423895083027418},
    {0.96499999999999997, 0.29617627105719035},
    {0.96999999999999997, 0.37562262960562781},
    {0.97499999999999998, 0.46649085112991484},
    {0.97999999999999998, 0.57129160482899355},
    {0.98499999999999999, 0.70557890751295849},
    {0.98999999999999999, 0.89223691547139916},
    {0.99250000000000005, 1.0169660718548892},
    {0.995, 1.1840335316133124},
    {0.99750000000000005, 1.4373785500549838},
    {0.999, 1.7721122548779351},
  };
  static const std::vector<Row> kConstantTrend = {
    {0.001, -4.6077584706291947},
    {0.0025000000000000001, -4.3427516798102594},
    {0.0050000000000000001, -4.1396517928047167},
    {0.0074999999999999997, -4.0119444000339932},
    {0.01, -3.9209227156621189},
    {0.014999999999999999, -3.7945676816369489},
    {0.02, -3.6975672893305509},
    {0.025000000000000001, -3.624125376128744},
    {0.029999999999999999, -3.5586862130652221},
    {0.035000000000000003, -3.5037822614912164},
    {0.040000000000000001, -3.4540702643738799},
    {0.044999999999999998, -3.4104723271950781},
    {0.050000000000000003, -3.3683009032816806},
    {0.055, -3.333128022997824},
    {0.059999999999999998, -3.2982265876938617},
    {0.065000000000000002, -3.2665341790469595},
    {0.070000000000000007, -3.2373549598449713},
    {0.074999999999999997, -3.2089143843080241},
    {0.080000000000000002, -3.1818617317320759},
    {0.085000000000000006, -3.1552896004835689},
    {0.089999999999999997, -3.1315300612955128},
    {0.095000000000000001, -3.1080904056098508},
    {0.10000000000000001, -3.0848779393859318},
    {0.105, -3.0630164580614712},
    {0.11, -3.0419343479048671},
    {0.115, -3.0221041342419794},
    {0.12, -3.0026667501198578},
    {0.125, -2.9839077183211993},
    {0.13, -2.9650469893324898},
    {0.13500000000000001, -2.9468049789862425},
    {0.14000000000000001, -2.9294542003349435},
    {0.14499999999999999, -2.9125194663919518},
    {0.14999999999999999, -2.8961298107330258},
    {0.155, -2.8798978351385047},
    {0.16, -2.863178087530506},
    {0.16500000000000001, -2.8479137661284439},
    {0.17000000000000001, -2.8337618567824849},
    {0.17499999999999999, -2.8195269900187205},
    {0.17999999999999999, -2.805436635303252},
    {0.185, -2.7910351517844578},
    {0.19, -2.7774238953775412},
    {0.19500000000000001, -2.7636662529138789},
    {0.20000000000000001, -2.7493785352031326},
    {0.20499999999999999, -2.7359104858567189},
    {0.20999999999999999, -2.7231806066944158},
    {0.215, -2.7104896893147044},
    {0.22, -2.6979496756848298},
    {0.22500000000000001, -2.6864321052119751},
    {0.23000000000000001, -2.6746363835960754},
    {0.23499999999999999, -2.6625638174878619},
    {0.23999999999999999, -2.6504171778930319},
    {0.245, -2.6383601466844464},
    {0.25, -2.6267618413175398},
    {0.255, -2.6152619212768222},
    {0.26000000000000001, -2.6035705055383156},
    {0.26500000000000001, -2.5919396479312109},
    {0.27000000000000002, -2.5806074320301753},
    {0.27500000000000002, -2.5700017843104139},
    {0.28000000000000003, -2.5586520226681784},
    {0.28499999999999998, -2.548120436844683},
    {0.28999999999999998, -2.5377166219780265},
    {0.29499999999999998, -2.5271017415691226},
    {0.29999999999999999, -2.5170540347341079},
    {0.30499999999999999, -2.5068461553313099},
    {0.31, -2.4964789945413699},
    {0.315, -2.4864117728915609},
    {0.32000000000000001, -2.4765453432487616},
    {0.32500000000000001, -2.4664242969510997},
    {0.33000000000000002, -2.4567611159399485},
    {0.33500000000000002, -2.4463628368183672},
    {0.34000000000000002, -2.4369737237681028},
    {0.34499999999999997, -2.4275522644524532},
    {0.34999999999999998, -2.4181426741735006},
    {0.35499999999999998, -2.4084413106566935},
    {0.35999999999999999, -2.3989437327540735},
    {0.36499999999999999, -2.3894877978369635},
    {0.37, -2.3797172793025672},
    {0.375, -2.3705316370356133},
    {0.38, -2.361170336406071},
    {0.38500000000000001, -2.3516832413951656},
    {0.39000000000000001, -2.3416328255362777},
    {0.39500000000000002, -2.3320135822805588},
    {0.40000000000000002, -2.3223348180750563},
    {0.40500000000000003, -2.3128982949414834},
    {0.40999999999999998, -2.3035210341970425},
    {0.41499999999999998, -2.2941170463913472},
    {0.41999999999999998, -2.2850802193502244},
    {0.42499999999999999, -2.2757680684840915},
    {0.42999999999999999, -2.2665977865191995},
    {0.435, -2.25725477357346},
    {0.44, -2.2478237704832358},
    {0.44500000000000001, -2.2391012999117459},
    {0.45000000000000001, -2.2301326783833035},
    {0.45500000000000002, -2.2212221580167144},
    {0.46000000000000002, -2.2127663380068245},
    {0.46500000000000002, -2.2039957880606926},
    {0.46999999999999997, -2.1947268006552072},
    {0.47499999999999998, -2.1856477880192759},
    {0.47999999999999998, -2.1763197378130519},
    {0.48499999999999999, -2.1677044408418675},
    {0.48999999999999999, -2.1585764696091116},
    {0.495, -2.1495998323924095},
    {0.5, -2.140612784199881},
    {0.505, -2.1314722867821021},
    {0.51000000000000001, -2.122746217669996},
    {0.51500000000000001, -2.1140109809793142},
    {0.52000000000000002, -2.1052828710833933},
    {0.52500000000000002, -2.0959733117401198},
    {0.53000000000000003, -2.0870318450953751},
    {0.53500000000000003, -2.0778937265558097},
    {0.54000000000000004, -2.0690400034237264},
    {0.54500000000000004, -2.0600027608961438},
    {0.55000000000000004, -2.050608985237218},
    {0.55500000000000005, -2.0420196072640429},
    {0.56000000000000005, -2.0329825793552438},
    {0.56499999999999995, -2.0238551016988842},
    {0.56999999999999995, -2.0146706836373856},
    {0.57499999999999996, -2.005423010102878},
    {0.57999999999999996, -1.9969120801687326},
    {0.58499999999999996, -1.9880952951854727},
    {0.58999999999999997, -1.9790948442178278},
    {0.59499999999999997, -1.9695123895405975},
    {0.59999999999999998, -1.9604241344785458},
    {0.60499999999999998, -1.9512250821138917},
    {0.60999999999999999, -1.9423987910637481},
    {0.61499999999999999, -1.9334487943984895},
    {0.62, -1.9243139105941545},
    {0.625, -1.9152376063999783},
    {0.63, -1.905571497216956},
    {0.63500000000000001, -1.8962004405648307},
    {0.64000000000000001, -1.8865355868194564},
    {0.64500000000000002, -1.8770904636591816},
    {0.65000000000000002, -1.8675552088072087},
    {0.65500000000000003, -1.8577262758420776},
    {0.66000000000000003, -1.8478365002148214},
    {0.66500000000000004, -1.8380297201573632},
    {0.67000000000000004, -1.8278946558329514},
    {0.67500000000000004, -1.8176567455559667},
    {0.68000000000000005, -1.8076323862374433},
    {0.68500000000000005, -1.7976625493020486},
    {0.68999999999999995, -1.7874590103768786},
    {0.69499999999999995, -1.7771301018031047},
    {0.69999999999999996, -1.7661174127005332},
    {0.70499999999999996, -1.7553768711931788},
    {0.70999999999999996, -1.7445132933599097},
    {0.71499999999999997, -1.7339358376204237},
    {0.71999999999999997, -1.7229792689970618},
    {0.72499999999999998, -1.7116835023208894},
    {0.72999999999999998, -1.7002978795337031},
    {0.73499999999999999, -1.6887741291066081},
    {0.73999999999999999, -1.6772055039023956},
    {0.745, -1.6653868221075241},
    {0.75, -1.6533676566315008},
    {0.755, -1.6410666052391893},
    {0.76000000000000001, -1.6283617797165668},
    {0.76500000000000001, -1.6154050022280659},
    {0.77000000000000002, -1.6016363225982582},
    {0.77500000000000002, -1.5877709516338363},
    {0.78000000000000003, -1.5749144757155011},
    {0.78500000000000003, -1.5605687396591872},
    {0.79000000000000004, -1.5466242850073173},
    {0.79500000000000004, -1.5312420138106821},
    {0.80000000000000004, -1.5165057188257032},
    {0.80500000000000005, -1.5006310463615513},
    {0.81000000000000005, -1.4836948288588241},
    {0.81499999999999995, -1.4676898649413233},
    {0.81999999999999995, -1.4512469765945715},
    {0.82499999999999996, -1.4342222287518056},
    {0.82999999999999996, -1.4173956903625122},
    {0.83499999999999996, -1.399721592225069},
    {0.83999999999999997, -1.381972985712155},
    {0.84499999999999997, -1.364659064133549},
    {0.84999999999999998, -1.3457392791152243},
    {0.85499999999999998, -1.3253661386744231},
    {0.85999999999999999, -1.3049980079842554},
    {0.86499999999999999, -1.2834400452273402},
    {0.87, -1.2613173277793397},
    {0.875, -1.2377749291157016},
    {0.88, -1.213708555601525},
    {0.88500000000000001, -1.1897790652713851},
    {0.89000000000000001, -1.1646778465634331},
    {0.89500000000000002, -1.1394464085164953},
    {0.90000000000000002, -1.1131577045912642},
    {0.90500000000000003, -1.0845224626852934},
    {0.91000000000000003, -1.0531125686263214},
    {0.91500000000000004, -1.0227250194187938},
    {0.92000000000000004, -0.98779711362068612},
    {0.92500000000000004, -0.95066169473060047},
    {0.93000000000000005, -0.91328301136093559},
    {0.93500000000000005, -0.87351280055498381},
    {0.93999999999999995, -0.83165730850916286},
    {0.94499999999999995, -0.7874842525199699},
    {0.94999999999999996, -0.73730805785294073},
    {0.95499999999999996, -0.68406285851720716},
    {0.95999999999999996, -0.62541958903653494},
    {0.96499999999999997, -0.55814538892009935},
    {0.96999999999999997, -0.48305519059489094},
    {0.97499999999999998, -0.39385545636377228},
    {0.97999999999999998, -0.28611302862072313},
    {0.98499999999999999, -0.15628954274173285},
    {0.98999999999999999, 0.017728753433076887},
    {0.99250000000000005, 0.1282312281048365},
    {0.995, 0.3118964652749146},
    {0.99750000000000005, 0.59004933051430031},
    {0.999, 0.9250879347839962},
  };
  return kind == RegressionKind::Constant ? kConstant : kConstantTrend;
}

const char* provenance() {
  return "Monte Carlo: 200000 random-walk replicates per regression kind, standard normal innovations, n=250, 15 augmentation lags, mt19937 seeds 20260825+i";
}

}  // namespace chronofit::adf_table
